#include "scg/directions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scg {

Vector sarah_update(const Vector& v_prev, const Vector& grad_cur, const Vector& grad_prev) {
  if (v_prev.size() != grad_cur.size() || v_prev.size() != grad_prev.size())
    throw std::invalid_argument("sarah_update: dimension mismatch");
  return grad_cur - grad_prev + v_prev;
}

double beta_fr(const Vector& v_cur, const Vector& v_ref) {
  if (v_cur.size() != v_ref.size()) throw std::invalid_argument("beta_fr: dimension mismatch");
  const double denom = v_ref.squaredNorm();
  if (denom < kBetaDenominatorFloor) return 0.0;
  return v_cur.squaredNorm() / denom;
}

double beta_afr(const Vector& v_cur, const Vector& v_ref, double rho, double cap) {
  if (!(rho > 0.0) || !(cap > 0.0))
    throw std::invalid_argument("beta_afr: rho and cap must be positive");
  const double denom = v_ref.squaredNorm();
  if (denom < kBetaDenominatorFloor) return 0.0;
  return std::min(cap, rho * (v_cur.squaredNorm() / denom));
}

double beta_frpr(const Vector& v_cur, const Vector& v_ref) {
  if (v_cur.size() != v_ref.size()) throw std::invalid_argument("beta_frpr: dimension mismatch");
  const double denom = v_ref.squaredNorm();
  if (denom < kBetaDenominatorFloor) return 0.0;
  const double fr = v_cur.squaredNorm() / denom;
  const double pr = v_cur.dot(v_cur - v_ref) / denom;
  return std::clamp(pr, -fr, fr);
}

double eval_beta(const BetaFormula& formula, const Vector& v_cur, const Vector& v_ref) {
  switch (formula.kind) {
    case BetaFormula::Kind::kAfr:
      return beta_afr(v_cur, v_ref, formula.rho, formula.cap);
    case BetaFormula::Kind::kFrpr: {
      const double beta = beta_frpr(v_cur, v_ref);
      if (formula.frpr_cap && std::abs(beta) > *formula.frpr_cap) return 0.0;
      return beta;
    }
  }
  throw std::invalid_argument("eval_beta: unknown formula");
}

Vector direction_update(const Vector& v, double beta, const Vector& d_ref) {
  if (v.size() != d_ref.size()) throw std::invalid_argument("direction_update: dimension mismatch");
  if (beta == 0.0) return -v;
  return -v + beta * d_ref;
}

IncrementVariance batch_increment_variance(const SparseDataset& ds, LossKind kind,
                                           const Vector& w_cur, const Vector& w_prev, Index b) {
  const Index n = ds.num_examples();
  if (n > 12) throw std::invalid_argument("batch_increment_variance: n too large to enumerate");
  if (b < 1 || b > n) throw std::invalid_argument("batch_increment_variance: need 1 <= b <= n");

  // Per-example gradient differences.
  std::vector<Vector> diff(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Index one[] = {i};
    diff[static_cast<std::size_t>(i)] =
        batch_gradient(ds, kind, w_cur, one) - batch_gradient(ds, kind, w_prev, one);
  }

  // Enumerate all size-b subsets in lexicographic order.
  double acc = 0.0;
  std::int64_t count = 0;
  std::vector<Index> pick(static_cast<std::size_t>(b));
  for (Index i = 0; i < b; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Vector mean = Vector::Zero(ds.dim());
    for (const Index i : pick) mean += diff[static_cast<std::size_t>(i)];
    mean /= static_cast<double>(b);
    acc += mean.squaredNorm();
    ++count;

    Index j = b - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - b + j) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (Index i = j + 1; i < b; ++i)
      pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
  }

  Vector full_diff = Vector::Zero(ds.dim());
  double individual = 0.0;
  for (Index i = 0; i < n; ++i) {
    full_diff += diff[static_cast<std::size_t>(i)];
    individual += diff[static_cast<std::size_t>(i)].squaredNorm();
  }
  full_diff /= static_cast<double>(n);
  individual /= static_cast<double>(n);

  const double nn = static_cast<double>(n);
  const double bb = static_cast<double>(b);
  IncrementVariance out;
  out.enumerated = acc / static_cast<double>(count);
  out.closed_form = nn * (bb - 1.0) / (bb * (nn - 1.0)) * full_diff.squaredNorm() +
                    (nn - bb) / (bb * (nn - 1.0)) * individual;
  return out;
}

}  // namespace scg
