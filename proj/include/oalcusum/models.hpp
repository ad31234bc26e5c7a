#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oalcusum/errors.hpp"
#include "oalcusum/rng.hpp"

namespace oalcusum {

// Pareto-type law with F(x) = 1 - x^{-alpha} on x >= 1. Only the extremely
// heavy-tailed range alpha in (0, 1) is accepted: there the mean is infinite
// and detection has to work off the tail index itself.
struct ParetoModel {
  double alpha;

  explicit ParetoModel(double alpha_);

  double cdf(double x) const { return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, -alpha); }

  // Inverse CDF; p in [0, 1).
  double quantile(double p) const;

  // ln f(x) = ln(alpha) - (1 + alpha) ln(x), x >= 1.
  double log_pdf(double x) const;

  double draw(Rng& rng) const { return std::pow(1.0 - rng.uniform(), -1.0 / alpha); }
};

// N(mean, 1). The variance is pinned at 1; the reference pair below is the
// standard 0 -> 1 shift.
struct NormalShiftModel {
  double mean;

  explicit NormalShiftModel(double mean_) : mean(mean_) {}

  double log_pdf(double x) const {
    double d = x - mean;
    return -0.5 * d * d - 0.91893853320467274178;  // ln sqrt(2 pi)
  }

  double draw(Rng& rng) const { return mean + rng.normal(); }
};

using Model = std::variant<ParetoModel, NormalShiftModel>;

// Convenience form of ParetoModel::quantile with its own validation.
double pareto_quantile(double alpha, double p);

// Deterministic: the same (model, seed, n) always produces the same sequence.
std::vector<double> sample_stream(const Model& model, std::uint64_t seed, std::int64_t n);

enum class Family { pareto, normal };

// KL-sign classification of the true post-change parameter: V- means the true
// law is closer to the pre-change law than to the reference, V+ the opposite,
// V0 the knife edge E_v(Z_1) = 0.
enum class Regime { v_minus, v_zero, v_plus };

std::string regime_name(Regime r);

// Pre-change law plus the reference post-change law defining the statistic
// Z = ln[p_ref(X)/p_pre(X)]. The normal pair is fixed at N(0,1) -> N(1,1),
// where Z = X - 1/2.
class ModelPair {
 public:
  static ModelPair pareto(double alpha0, double alpha1);
  static ModelPair normal();

  Family family() const { return family_; }
  double pre_param() const { return pre_; }
  double post_ref_param() const { return post_ref_; }

  Model pre_model() const { return model_for(pre_); }
  Model post_ref_model() const { return model_for(post_ref_); }
  Model model_for(double param) const;

  // Z at one observation. Pareto: ln(a1/a0) + (a0 - a1) ln x, x >= 1.
  double llr(double x) const {
    if (family_ == Family::pareto) {
      if (x < 1.0) throw std::domain_error("llr: Pareto observation must be >= 1, got " + std::to_string(x));
      return llr_const_ + llr_slope_ * std::log(x);
    }
    return x - 0.5;
  }

  // E_v(Z_1) under the true parameter (tail index or mean).
  double mean_llr(double true_param) const;

  // h_v(theta) = E_v(e^{theta Z_1}). Throws MgfDomainError outside the strip.
  double mgf_llr(double true_param, double theta) const;

  // E_v(e^{theta Ztilde}) for Ztilde = (1+q) Z - q mu; the tilt that appears
  // in the dynamic-limit exponent analysis. q >= 0.
  double mgf_llr_tilted(double true_param, double theta, double q, double mu) const;

  // Valid open interval of mgf_llr arguments: {t : t in (lo, hi)}.
  std::pair<double, double> mgf_domain(double true_param) const;

  Regime classify_regime(double true_param) const;

 private:
  ModelPair(Family f, double pre, double post_ref);
  void validate_param(double p, const char* what) const;

  Family family_;
  double pre_;
  double post_ref_;
  double llr_const_ = 0.0;  // ln(a1/a0) for pareto
  double llr_slope_ = 0.0;  // a0 - a1 for pareto
};

// Discrete mixture reference: weights must be positive and sum to 1 within
// 1e-12. All components share the pre-change model's family.
struct MixturePost {
  std::vector<std::pair<double, Model>> components;

  explicit MixturePost(std::vector<std::pair<double, Model>> comps);
};

// ln[ sum_i w_i p_i(x) / p_pre(x) ], evaluated in log space.
double mixture_llr(const Model& pre, const MixturePost& mix, double x);

}  // namespace oalcusum
