#include "oalcusum/detectors.hpp"

#include <algorithm>

namespace oalcusum {

RunOutcome run_to_alarm(const DetectorConfig& cfg, std::span<const double> zs, std::int64_t cap) {
  std::size_t i = 0;
  return run_to_alarm(
      cfg,
      [&]() -> std::optional<double> {
        if (i >= zs.size()) return std::nullopt;
        return zs[i++];
      },
      cap);
}

double brute_force_stat(std::span<const double> z) {
  if (z.empty()) throw std::domain_error("brute_force_stat: empty sequence");
  const std::size_t n = z.size();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= n; ++k) {
    double sum = 0.0;
    for (std::size_t i = n - k; i < n; ++i) sum += z[i];
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace oalcusum
