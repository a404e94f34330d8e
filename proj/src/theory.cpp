#include "scg/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace scg {

namespace {

void validate(const TheoryInputs& in) {
  if (in.epoch_length < 1) throw std::invalid_argument("theory: epoch_length must be >= 1");
  if (!(in.eta1 > 0.0) || !(in.eta2 > 0.0))
    throw std::invalid_argument("theory: step bounds must be positive");
  if (!(in.beta_hat > 0.0) || !(in.beta_hat < 1.0))
    throw std::invalid_argument("theory: beta_hat must lie in (0, 1)");
  if (!(in.alpha > 1.0)) throw std::invalid_argument("theory: alpha must exceed 1");
  if (in.tau < 0.0 || in.sigma < 0.0)
    throw std::invalid_argument("theory: deviation constants must be >= 0");
}

}  // namespace

double curvature_ratio_bound(double x) {
  if (x < 0.0 || x >= 1.0) throw std::invalid_argument("curvature_ratio_bound: need 0 <= x < 1");
  return (1.0 + x) / (1.0 - x);
}

RateConstants rate_constants(const TheoryInputs& in) {
  validate(in);
  const double bh = in.beta_hat;
  const double one_minus = 1.0 - bh;
  const double one_plus = 1.0 + bh;
  RateConstants out;
  out.xi = (2.0 + 4.0 * in.eta2 * in.eta2) * in.alpha * bh * bh /
           ((in.epoch_length + 1) * in.eta1 * in.eta1 * one_minus * one_minus * one_plus);
  out.c = (one_minus * in.tau / in.alpha +
           one_minus * one_minus * one_plus / (2.0 * in.alpha * bh * bh)) *
          in.sigma * in.sigma;
  return out;
}

RateConstants rate_constants_small_c2(const TheoryInputs& in) {
  validate(in);
  const double bh = in.beta_hat;
  const double one_minus = 1.0 - bh;
  RateConstants out;
  out.xi = (2.0 + 4.0 * in.eta2 * in.eta2) * bh * bh /
           ((in.epoch_length + 1) * in.eta1 * in.eta1 * one_minus * one_minus);
  out.c = (one_minus * in.tau / (1.0 + bh) + one_minus * one_minus / (2.0 * bh * bh)) *
          in.sigma * in.sigma;
  return out;
}

RateConstants switching_rate_constants(const TheoryInputs& in) {
  validate(in);
  if (in.conjugate_steps < 1)
    throw std::invalid_argument("theory: switching variant needs conjugate_steps >= 1");
  const double bh = in.beta_hat;
  const double decay = 1.0 - std::pow(bh, in.conjugate_steps);
  const double grow = 1.0 + std::pow(bh, in.conjugate_steps);
  const double one_minus = 1.0 - bh;
  const double one_plus = 1.0 + bh;
  RateConstants out;
  out.xi = rate_constants(in).xi * decay;
  out.c = (one_minus * grow * in.tau / in.alpha +
           one_minus * one_minus * one_plus / (2.0 * in.alpha * bh * bh * decay)) *
          in.sigma * in.sigma;
  return out;
}

bool check_feasibility(Index n, Index b, int m, double gamma, double eta2, double lipschitz,
                       int q) {
  if (n <= 1) throw std::invalid_argument("check_feasibility: need n > 1");
  if (b < 1 || b > n) throw std::invalid_argument("check_feasibility: need 1 <= b <= n");
  if (m < 1) throw std::invalid_argument("check_feasibility: need m >= 1");
  if (!(eta2 > 0.0)) throw std::invalid_argument("check_feasibility: eta2 must be positive");
  const double steps = q >= 1 ? static_cast<double>(m + q - 1) : static_cast<double>(m);
  const double variance_scale =
      static_cast<double>(n - b) / (static_cast<double>(b) * static_cast<double>(n - 1));
  const double first = (2.0 + 4.0 * eta2 * eta2) * variance_scale * lipschitz * lipschitz *
                       gamma * gamma * steps;
  const double second = 2.0 / eta2 - lipschitz * gamma - 3.0;
  const double tol = 1e-12 * std::max({1.0, std::abs(first), std::abs(second)});
  return first - second <= tol;
}

std::optional<double> suggested_gamma(int m, double eta2, double lipschitz, Index n, Index b) {
  if (m < 1) throw std::invalid_argument("suggested_gamma: need m >= 1");
  if (n <= 1 || b < 1 || b > n) throw std::invalid_argument("suggested_gamma: need 1 <= b <= n, n > 1");
  if (!(eta2 > 0.0) || eta2 > 2.0 / 3.0)
    throw std::invalid_argument("suggested_gamma: need 0 < eta2 <= 2/3");
  if (!(lipschitz > 0.0)) throw std::invalid_argument("suggested_gamma: L must be positive");

  const double first = (2.0 - 3.0 * eta2) / (eta2 * lipschitz);
  const double varpi = (1.0 + 2.0 * eta2 * eta2) * static_cast<double>(n - b) /
                       (eta2 * static_cast<double>(b) * static_cast<double>(n - 1));
  if (varpi == 0.0) return first;  // b = n: the quadratic term vanishes
  const double discriminant = 1.0 - 24.0 * m * eta2 * varpi + 16.0 * m * varpi;
  if (discriminant < 0.0) return std::nullopt;
  const double second = (-1.0 + std::sqrt(discriminant)) / (4.0 * lipschitz * eta2 * m * varpi);
  return std::min(first, second);
}

double dominance_rate(double tau_o, int m, double eta1, double gamma) {
  if (!(tau_o > 0.0) || m < 1 || !(eta1 > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("dominance_rate: all inputs must be positive");
  return tau_o / ((m + 1) * eta1 * eta1 * gamma);
}

double convergence_radius(double xi, double delta, double c) {
  if (!(xi < 1.0)) throw std::invalid_argument("convergence_radius: need xi < 1");
  if (xi < 0.0 || delta < 0.0 || c < 0.0)
    throw std::invalid_argument("convergence_radius: inputs must be >= 0");
  return xi * (delta + c) / (1.0 - xi);
}

Radii convergence_radii(double xi, double xi_st, double delta, double delta_st, double c) {
  Radii out;
  out.carried = convergence_radius(xi, delta, c);
  out.restarted = convergence_radius(xi, delta, 0.0);
  out.switching = convergence_radius(xi_st, delta_st, c);
  return out;
}

}  // namespace scg
