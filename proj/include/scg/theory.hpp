#pragma once

#include <optional>

#include "scg/dataset.hpp"

namespace scg {

/// Analysis-side constants feeding the rate calculators. These are inputs to
/// bounds, not measured quantities; the harness can echo measured stand-ins
/// next to them for comparison.
struct TheoryInputs {
  int epoch_length = 0;     // m
  double eta1 = 0.0;        // lower step bound
  double eta2 = 0.0;        // step cap
  double beta_hat = 0.0;    // conjugate-parameter bound, in (0, 1)
  double alpha = 2.0;       // bound on (1+c2)/(1-c2), > 1
  double tau = 0.0;         // deviation scaling constant
  double sigma = 0.0;       // estimator deviation bound
  int conjugate_steps = 0;  // q = floor((m-1)/t), switching variant only
};

/// (1+x)/(1-x) on [0, 1); the factor by which the curvature condition can
/// amplify the previous estimator norm.
double curvature_ratio_bound(double x);

struct RateConstants {
  double xi = 0.0;  // per-epoch contraction factor
  double c = 0.0;   // additive deviation constant
};

/// xi = (2+4*eta2^2) * alpha * bh^2 / ((m+1) * eta1^2 * (1-bh)^2 * (1+bh)),
/// c  = ((1-bh)*tau/alpha + (1-bh)^2*(1+bh)/(2*alpha*bh^2)) * sigma^2.
RateConstants rate_constants(const TheoryInputs& in);

/// The alpha = 2 regrouping:
/// xi = (2+4*eta2^2) * bh^2 / ((m+1) * eta1^2 * (1-bh)^2),
/// c  = ((1-bh)*tau/(1+bh) + (1-bh)^2/(2*bh^2)) * sigma^2.
RateConstants rate_constants_small_c2(const TheoryInputs& in);

/// Switching-variant constants; requires conjugate_steps >= 1.
/// xi = rate_constants().xi * (1 - bh^q),
/// c  = ((1-bh)*(1+bh^q)*tau/alpha + (1-bh)^2*(1+bh)/(2*alpha*bh^2*(1-bh^q))) * sigma^2.
RateConstants switching_rate_constants(const TheoryInputs& in);

/// Feasible batch/momentum pairing:
/// (2+4*eta2^2) * (n-b)/(b(n-1)) * L^2 gamma^2 M <= 2/eta2 - L*gamma - 3,
/// with M = m for the searched variants and M = m+q-1 for the switching one
/// (pass q >= 1 to select the latter). The comparison allows a relative
/// 1e-12 slack so exact-boundary inputs count as feasible.
bool check_feasibility(Index n, Index b, int m, double gamma, double eta2, double lipschitz,
                       int q = 0);

/// Largest momentum weight passing check_feasibility at the same (m, b):
/// min{ (2-3*eta2)/(eta2*L),
///      (-1+sqrt(1-24*m*eta2*varpi+16*m*varpi)) / (4*L*eta2*m*varpi) },
/// varpi = (1+2*eta2^2)(n-b)/(eta2*b*(n-1)). b = n degenerates to the first
/// term. Returns nullopt when the discriminant is negative (no suggestion);
/// requires eta2 <= 2/3.
std::optional<double> suggested_gamma(int m, double eta2, double lipschitz, Index n, Index b);

/// Objective-gap contraction factor under gradient dominance:
/// tau_o / ((m+1) * eta1^2 * gamma).
double dominance_rate(double tau_o, int m, double eta1, double gamma);

/// xi*(delta+c)/(1-xi); requires xi < 1. The restart radius is the c = 0 case.
double convergence_radius(double xi, double delta, double c);

struct Radii {
  double carried = 0.0;    // xi*(delta+c)/(1-xi)
  double restarted = 0.0;  // xi*delta/(1-xi)
  double switching = 0.0;  // xi_st*(delta_st+c)/(1-xi_st)
};
Radii convergence_radii(double xi, double xi_st, double delta, double delta_st, double c);

}  // namespace scg
