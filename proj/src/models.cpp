#include "oalcusum/models.hpp"

#include <algorithm>
#include <limits>

namespace oalcusum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("Pareto tail index must lie in (0, 1), got " + std::to_string(alpha));
  }
}

}  // namespace

ParetoModel::ParetoModel(double alpha_) : alpha(alpha_) { check_alpha(alpha); }

double ParetoModel::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::domain_error("Pareto quantile needs p in [0, 1), got " + std::to_string(p));
  }
  return std::pow(1.0 - p, -1.0 / alpha);
}

double ParetoModel::log_pdf(double x) const {
  if (x < 1.0) throw std::domain_error("Pareto density support is x >= 1, got " + std::to_string(x));
  return std::log(alpha) - (1.0 + alpha) * std::log(x);
}

double pareto_quantile(double alpha, double p) { return ParetoModel(alpha).quantile(p); }

std::vector<double> sample_stream(const Model& model, std::uint64_t seed, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("sample_stream: n must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  Rng rng(seed);
  std::visit(
      [&](const auto& m) {
        for (std::int64_t i = 0; i < n; ++i) out.push_back(m.draw(rng));
      },
      model);
  return out;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::v_minus: return "V-";
    case Regime::v_zero: return "V0";
    case Regime::v_plus: return "V+";
  }
  return "?";
}

ModelPair::ModelPair(Family f, double pre, double post_ref)
    : family_(f), pre_(pre), post_ref_(post_ref) {
  if (family_ == Family::pareto) {
    check_alpha(pre_);
    check_alpha(post_ref_);
    if (pre_ == post_ref_) {
      throw std::invalid_argument("ModelPair: pre-change and reference tail index must differ");
    }
    llr_const_ = std::log(post_ref_ / pre_);
    llr_slope_ = pre_ - post_ref_;
  }
}

ModelPair ModelPair::pareto(double alpha0, double alpha1) {
  return ModelPair(Family::pareto, alpha0, alpha1);
}

ModelPair ModelPair::normal() { return ModelPair(Family::normal, 0.0, 1.0); }

Model ModelPair::model_for(double param) const {
  if (family_ == Family::pareto) return ParetoModel(param);
  return NormalShiftModel(param);
}

void ModelPair::validate_param(double p, const char* what) const {
  if (family_ == Family::pareto) {
    if (!(p > 0.0 && p < 1.0)) {
      throw std::domain_error(std::string(what) + ": Pareto tail index must lie in (0, 1), got " +
                              std::to_string(p));
    }
  }
}

double ModelPair::mean_llr(double true_param) const {
  validate_param(true_param, "mean_llr");
  if (family_ == Family::pareto) {
    // E ln X = 1/alpha under Pareto(alpha).
    return llr_const_ + llr_slope_ / true_param;
  }
  return true_param - 0.5;
}

std::pair<double, double> ModelPair::mgf_domain(double true_param) const {
  validate_param(true_param, "mgf_domain");
  if (family_ == Family::normal) return {-kInf, kInf};
  // Need theta * (a0 - a1) < alpha_true.
  if (llr_slope_ > 0.0) return {-kInf, true_param / llr_slope_};
  return {true_param / llr_slope_, kInf};
}

double ModelPair::mgf_llr(double true_param, double theta) const {
  validate_param(true_param, "mgf_llr");
  if (family_ == Family::pareto) {
    double margin = true_param - theta * llr_slope_;
    if (margin <= 0.0) {
      auto [lo, hi] = mgf_domain(true_param);
      double boundary = llr_slope_ > 0.0 ? hi : lo;
      throw MgfDomainError("MGF undefined: theta*(alpha0-alpha1) >= alpha_true at theta = " +
                               std::to_string(theta) + " (domain boundary " +
                               std::to_string(boundary) + ")",
                           boundary);
    }
    return std::exp(theta * llr_const_) * true_param / margin;
  }
  double mu = true_param - 0.5;
  return std::exp(theta * mu + 0.5 * theta * theta);
}

double ModelPair::mgf_llr_tilted(double true_param, double theta, double q, double mu) const {
  if (q < 0.0) throw std::invalid_argument("mgf_llr_tilted: tilt coefficient q must be >= 0");
  // Ztilde = (1+q) Z - q mu, so E e^{theta Ztilde} = e^{-theta q mu} h(theta (1+q)).
  return std::exp(-theta * q * mu) * mgf_llr(true_param, theta * (1.0 + q));
}

Regime ModelPair::classify_regime(double true_param) const {
  double mu = mean_llr(true_param);
  if (std::abs(mu) <= 1e-12) return Regime::v_zero;
  return mu < 0.0 ? Regime::v_minus : Regime::v_plus;
}

MixturePost::MixturePost(std::vector<std::pair<double, Model>> comps)
    : components(std::move(comps)) {
  if (components.empty()) throw std::invalid_argument("MixturePost: needs at least one component");
  double total = 0.0;
  for (const auto& [w, m] : components) {
    if (!(w > 0.0)) throw std::invalid_argument("MixturePost: weights must be > 0");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("MixturePost: weights must sum to 1, got " + std::to_string(total));
  }
}

double mixture_llr(const Model& pre, const MixturePost& mix, double x) {
  auto log_pdf = [&](const Model& m) {
    return std::visit([&](const auto& mm) { return mm.log_pdf(x); }, m);
  };
  // log-sum-exp over ln w_i + ln p_i(x)
  double max_term = -kInf;
  std::vector<double> terms;
  terms.reserve(mix.components.size());
  for (const auto& [w, m] : mix.components) {
    double t = std::log(w) + log_pdf(m);
    terms.push_back(t);
    max_term = std::max(max_term, t);
  }
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - max_term);
  return max_term + std::log(acc) - log_pdf(pre);
}

}  // namespace oalcusum
