#pragma once

#include <cstdint>

#include "oalcusum/detectors.hpp"
#include "oalcusum/models.hpp"

namespace oalcusum {

// Converged output of the exponent fixed point: theta_star is the positive
// root of H, u its slope there, and the two must be mutually consistent.
struct ThetaStarSolution {
  double theta_star = 0.0;
  double u = 0.0;  // H'(theta_star) at the fixed point
  double a = 0.0;  // window coefficient the solve used
  int iterations = 0;
  double residual = 0.0;  // |H(theta_star)| at the converged u
};

// Positive root of h_v(s) = 1. Defined in the V- regime, where the unique
// positive crossing exists; s* = 1 at the pre-change parameter.
double solve_s_star(const ModelPair& pair, double true_param);

// The exponent generator
//   H(theta) = (a u / g(mu)) ln htilde(theta) + (1 - a u / g(mu)) ln h(theta)
// with htilde the MGF of (1+q) Z - q mu, q = |g'(mu)| / a. Convex, H(0) = 0,
// H'(0) = mu.
double H(const ModelPair& pair, double true_param, const GFunction& g, double a, double u_trial,
         double mu, double theta);

// Damped fixed-point iteration on u = H'(theta*), inner bisection for the
// positive root of H. Requires mu < 0 and g(mu) > 0.
ThetaStarSolution solve_theta_star(const ModelPair& pair, double true_param, const GFunction& g,
                                   double a);

// Closed form for the normal 0 -> 1 shift:
//   theta* = 2 a |mu| g(mu) / (a g(mu) + |mu g'(mu)| (2a + |g'(mu)|)).
double example1_theta_star(double a, double mu, const GFunction& g);

// The prefactor constant b: the first x > g(mu)/u where
//   Theta(x) = theta(1/x) - x H(theta(1/x)) - 2 theta*
// crosses zero, with theta(1/x) defined by H'(theta(1/x)) = 1/x.
double compute_b(const ModelPair& pair, double true_param, const GFunction& g, double a,
                 const ThetaStarSolution& sol);

// E_v(Z_1^2); the variance proxy in the V0 branch. Closed form for the
// normal family, numeric integration for Pareto.
double second_moment_llr(const ModelPair& pair, double true_param);

enum class Ordering { first_smaller, second_smaller, indistinguishable };

// Leading-order ARL approximation with an honest prefactor interval; the
// theorems pin A and B only to intervals, so no single number is reported as
// exact in V- and V0.
struct ArlApproximation {
  Regime regime = Regime::v_minus;
  double leading_log = 0.0;  // c theta* g(mu) | 2 ln(c g(0)) - ln sigma^2 | ln(c g(mu)/mu)
  double prefactor_low = 1.0;
  double prefactor_high = 1.0;
  double arl_log_low = 0.0;   // ln of the ARL interval endpoints
  double arl_log_high = 0.0;
  double point = 0.0;  // exp of the log-midpoint; may overflow to inf for huge exponents
  bool leading_order_only = false;
};

ArlApproximation arl_approx_oal(const ModelPair& pair, double true_param, double c,
                                const GFunction& g, double a);

// Constant-limit analogue (Wald / martingale estimates); point values only.
ArlApproximation arl_approx_cusum(const ModelPair& pair, double true_param, double c);

// Detection-speed ordering of two limit functions whose in-control ARLs have
// been matched, i.e. c1 theta1*(v0) g1(mu0) = c2 theta2*(v0) g2(mu0).
Ordering corollary_compare(const GFunction& g1, double c1, const GFunction& g2, double c2,
                           const ModelPair& pair, double true_param, double a);

// Constants of the bounded-ARL regime (mu > 0, g(mu) < 0): the detection
// delay stays below B for every c.
struct BoundedArlConstants {
  double a_star = 0.0;   // root of g
  double mu_star = 0.0;  // max(a_star, 0)
  double theta_star = 0.0;
  double b = 0.0;
  double d = 0.0;
  double a0 = 0.0;
  double B = 0.0;
};

BoundedArlConstants bounded_arl_constants(const ModelPair& pair, double true_param,
                                          const GFunction& g);

// Delay bound for a change at k: B when k = 1, otherwise
// (a0+1)(k-1) P0(T >= k) + 2 e^{-(a0+1)(k-1) b} / (1 - e^{-b}).
double bounded_arl_tail_bound(const BoundedArlConstants& constants, std::int64_t k,
                              double p0_geq_k);

}  // namespace oalcusum
