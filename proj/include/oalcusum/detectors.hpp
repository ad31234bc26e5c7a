#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oalcusum {

// The control-limit multiplier g_u: identically 1 up to mu0, then decreasing
// with slope u. For u > 0 it crosses zero at mu0 + 1/u and keeps going
// negative; the alarm rule tolerates negative limits by design.
struct GFunction {
  double slope = 0.0;  // u >= 0
  double mu0 = 0.0;    // in-control mean of Z

  GFunction() = default;
  GFunction(double u, double mu0_) : slope(u), mu0(mu0_) {
    if (!(slope >= 0.0)) throw std::invalid_argument("GFunction: slope u must be >= 0");
  }

  double operator()(double x) const { return x <= mu0 ? 1.0 : 1.0 - slope * (x - mu0); }

  // x* with g(x*) = 0; absent when g is constant.
  std::optional<double> root() const {
    if (slope == 0.0) return std::nullopt;
    return mu0 + 1.0 / slope;
  }

  // One-sided derivative: 0 on the flat branch (including at the kink), -u
  // to the right of it.
  double derivative_at(double x) const { return x <= mu0 ? 0.0 : -slope; }
};

inline double g_eval(const GFunction& g, double x) { return g(x); }
inline std::optional<double> g_root(const GFunction& g) { return g.root(); }

// Window for the adjusted mean: the full running mean of Z (the a = infinity
// case) or a sliding window of the last min(n, ceil(a c + 1)) values.
class WindowMode {
 public:
  static WindowMode full_mean() { return WindowMode(-1.0); }
  static WindowMode sliding(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("WindowMode::sliding: a must be > 0");
    return WindowMode(a);
  }

  bool is_full() const { return a_ < 0.0; }
  double a() const { return a_; }

 private:
  explicit WindowMode(double a) : a_(a) {}
  double a_;
};

// Window length j = min(n, ceil(a c + 1)).
inline std::int64_t sliding_len(std::int64_t n, double a, double c) {
  if (n < 1) throw std::invalid_argument("sliding_len: n must be >= 1");
  double raw = std::ceil(a * c + 1.0);
  if (raw >= 9.0e18) return n;
  return std::min(n, static_cast<std::int64_t>(raw));
}

struct DetectorConfig {
  double c = 1.0;
  GFunction g;
  WindowMode window = WindowMode::full_mean();

  DetectorConfig() = default;
  DetectorConfig(double c_, GFunction g_, WindowMode w) : c(c_), g(g_), window(w) {
    if (!(c > 0.0)) throw std::invalid_argument("DetectorConfig: c must be > 0");
  }

  // Ring capacity for the sliding window, fixed at construction since c is
  // constant over a run.
  std::int64_t window_capacity() const {
    if (window.is_full()) return 0;
    return sliding_len(std::numeric_limits<std::int64_t>::max(), window.a(), c);
  }
};

// One monitored stream. The statistic follows the k >= 1 window maximum,
// s_n = max(s_{n-1}, 0) + z_n with s_1 = z_1; the alarm fires when
// s_n >= c g(mean of recent Z). Once alarmed the state is frozen.
class DetectorState {
 public:
  explicit DetectorState(const DetectorConfig& cfg)
      : cfg_(cfg), ring_(static_cast<std::size_t>(cfg.window_capacity()), 0.0) {}

  // Feeds one Z value; returns true when this step raises the alarm.
  bool step(double z) {
    if (alarmed_) throw std::logic_error("DetectorState::step: state is frozen after an alarm");
    s_ = n_ == 0 ? z : std::max(s_, 0.0) + z;
    ++n_;
    update_mean(z);
    limit_ = cfg_.c * cfg_.g(mean_);
    if (s_ >= limit_) {
      alarmed_ = true;
      alarm_index_ = n_;
    }
    return alarmed_;
  }

  std::int64_t n() const { return n_; }
  double statistic() const { return s_; }
  double z_mean() const { return mean_; }
  double current_limit() const { return limit_; }
  bool alarmed() const { return alarmed_; }
  std::optional<std::int64_t> alarm_index() const {
    if (!alarmed_) return std::nullopt;
    return alarm_index_;
  }

 private:
  void update_mean(double z) {
    if (cfg_.window.is_full()) {
      sum_ += z;
      mean_ = sum_ / static_cast<double>(n_);
      return;
    }
    auto cap = static_cast<std::int64_t>(ring_.size());
    if (n_ <= cap) {
      ring_[static_cast<std::size_t>(n_ - 1)] = z;
      sum_ += z;
      mean_ = sum_ / static_cast<double>(n_);
    } else {
      auto slot = static_cast<std::size_t>((n_ - 1) % cap);
      sum_ += z - ring_[slot];
      ring_[slot] = z;
      mean_ = sum_ / static_cast<double>(cap);
    }
  }

  DetectorConfig cfg_;
  std::vector<double> ring_;
  std::int64_t n_ = 0;
  double s_ = 0.0;
  double sum_ = 0.0;
  double mean_ = 0.0;
  double limit_ = 0.0;
  bool alarmed_ = false;
  std::int64_t alarm_index_ = 0;
};

struct RunOutcome {
  enum class Status { alarm, censored, exhausted };

  Status status = Status::exhausted;
  std::int64_t stop = 0;  // alarm step; meaningful only when status == alarm
  std::int64_t n_processed = 0;
  double final_stat = std::numeric_limits<double>::quiet_NaN();
  double final_limit = std::numeric_limits<double>::quiet_NaN();
};

// Runs the detector until the alarm, the step cap, or the source runs dry.
// Source is any callable returning std::optional<double>; input is never
// consumed past the alarm.
template <typename Source>
RunOutcome run_to_alarm(const DetectorConfig& cfg, Source&& next, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("run_to_alarm: cap must be >= 1");
  DetectorState state(cfg);
  RunOutcome out;
  for (std::int64_t n = 1; n <= cap; ++n) {
    std::optional<double> z = next();
    if (!z) {
      out.status = RunOutcome::Status::exhausted;
      break;
    }
    bool alarm = state.step(*z);
    out.n_processed = n;
    out.final_stat = state.statistic();
    out.final_limit = state.current_limit();
    if (alarm) {
      out.status = RunOutcome::Status::alarm;
      out.stop = n;
      return out;
    }
    if (n == cap) out.status = RunOutcome::Status::censored;
  }
  return out;
}

RunOutcome run_to_alarm(const DetectorConfig& cfg, std::span<const double> zs, std::int64_t cap);

// O(n^2) evaluation of max_{1<=k<=n} sum_{i=n-k+1}^{n} z_i. Reference oracle
// for the recursion; deliberately brute force.
double brute_force_stat(std::span<const double> z);

}  // namespace oalcusum
