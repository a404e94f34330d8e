#pragma once

#include <utility>
#include <vector>

#include "scg/problem.hpp"
#include "scg/rng.hpp"

namespace scg::test {

/// Random sparse rows with entries in [-1, 1] and labels from a planted sparse
/// separator plus noise, then row-normalized. Deterministic in the seed.
inline SparseDataset make_classification_dataset(std::uint64_t seed, Index n, Index d,
                                                 double density = 0.4) {
  Rng rng(seed);
  Vector truth = Vector::Zero(d);
  for (Index j = 0; j < d; ++j)
    if (rng.uniform() < 0.5) truth[j] = rng.gaussian();

  std::vector<std::vector<std::pair<Index, double>>> rows;
  std::vector<int> labels;
  rows.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    std::vector<std::pair<Index, double>> row;
    double margin = 0.0;
    for (Index j = 0; j < d; ++j) {
      if (rng.uniform() < density) {
        const double value = rng.uniform(-1.0, 1.0);
        row.emplace_back(j, value);
        margin += value * truth[j];
      }
    }
    margin += 0.1 * rng.gaussian();
    rows.push_back(std::move(row));
    labels.push_back(margin >= 0.0 ? 1 : -1);
  }
  return normalize_rows_l2(SparseDataset::from_rows(rows, labels, d));
}

/// Planted-separator variant: every example is shifted along a common hidden
/// direction according to its label, then 2% of labels are flipped and rows
/// are normalized. The shift controls how informative the start at w = 0 is.
inline SparseDataset make_planted_dataset(std::uint64_t seed, Index n, Index d, double density,
                                          double shift) {
  Rng rng(seed);
  Vector direction(d);
  for (Index j = 0; j < d; ++j) direction[j] = rng.gaussian();
  direction.normalize();

  std::vector<std::vector<std::pair<Index, double>>> rows;
  std::vector<int> labels;
  for (Index i = 0; i < n; ++i) {
    const int label = rng.uniform() < 0.5 ? 1 : -1;
    std::vector<std::pair<Index, double>> row;
    for (Index j = 0; j < d; ++j) {
      double value = rng.uniform() < density ? rng.uniform(-1.0, 1.0) : 0.0;
      value += shift * label * direction[j];
      if (value != 0.0) row.emplace_back(j, value);
    }
    labels.push_back(rng.uniform() < 0.02 ? -label : label);
    rows.push_back(std::move(row));
  }
  return normalize_rows_l2(SparseDataset::from_rows(rows, labels, d));
}

inline Vector random_vector(Rng& rng, Index d, double scale = 1.0) {
  Vector v(d);
  for (Index j = 0; j < d; ++j) v[j] = scale * rng.uniform(-1.0, 1.0);
  return v;
}

inline std::vector<Index> all_indices(Index n) {
  std::vector<Index> out(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

/// Central finite differences of the batch objective; the independent oracle
/// for gradient checks.
inline Vector fd_batch_gradient(const SparseDataset& ds, LossKind kind, const Vector& w,
                                std::span<const Index> batch, double h = 1e-6) {
  Vector grad(w.size());
  Vector probe = w;
  for (Index j = 0; j < w.size(); ++j) {
    probe[j] = w[j] + h;
    const double up = batch_loss(ds, kind, probe, batch);
    probe[j] = w[j] - h;
    const double down = batch_loss(ds, kind, probe, batch);
    probe[j] = w[j];
    grad[j] = (up - down) / (2.0 * h);
  }
  return grad;
}

/// Least-squares finite sum f_i(w) = 0.5 * (x_i . (w - target))^2. The Hessian
/// is (1/n) X^T X; with b = n the optimizers see an exact quadratic.
class LeastSquaresProblem final : public Problem {
 public:
  LeastSquaresProblem(Eigen::MatrixXd x, Vector target)
      : x_(std::move(x)), target_(std::move(target)) {}

  static LeastSquaresProblem random(std::uint64_t seed, Index n, Index d) {
    Rng rng(seed);
    Eigen::MatrixXd x(n, d);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < d; ++j) x(i, j) = rng.gaussian() / std::sqrt(static_cast<double>(d));
    Vector target(d);
    for (Index j = 0; j < d; ++j) target[j] = rng.uniform(-1.0, 1.0);
    return LeastSquaresProblem(std::move(x), std::move(target));
  }

  /// Minimizer at the origin. Residuals then shrink with the iterates, so
  /// slope evaluations keep full relative precision arbitrarily deep; use this
  /// for tests that drive gradients toward the floating-point floor.
  static LeastSquaresProblem random_centered(std::uint64_t seed, Index n, Index d) {
    Rng rng(seed);
    Eigen::MatrixXd x(n, d);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < d; ++j) x(i, j) = rng.gaussian() / std::sqrt(static_cast<double>(d));
    return LeastSquaresProblem(std::move(x), Vector::Zero(d));
  }

  Index num_examples() const override { return x_.rows(); }
  Index dim() const override { return x_.cols(); }

  double batch_loss(const Vector& w, std::span<const Index> batch) const override {
    double acc = 0.0;
    for (const Index i : batch) {
      const double r = x_.row(i).dot(w - target_);
      acc += 0.5 * r * r;
    }
    return acc / static_cast<double>(batch.size());
  }

  Vector batch_gradient(const Vector& w, std::span<const Index> batch) const override {
    Vector grad = Vector::Zero(dim());
    for (const Index i : batch) {
      const double r = x_.row(i).dot(w - target_);
      grad += r * x_.row(i).transpose();
    }
    return grad / static_cast<double>(batch.size());
  }

  Eigen::MatrixXd hessian() const {
    return x_.transpose() * x_ / static_cast<double>(x_.rows());
  }
  const Vector& target() const { return target_; }

 private:
  Eigen::MatrixXd x_;
  Vector target_;
};

/// Textbook linear conjugate gradient on 0.5*(w-t)^T A (w-t); the finite-
/// termination oracle. Returns gradient norms per step including the start.
inline std::vector<double> linear_cg_gradient_norms(const Eigen::MatrixXd& a, const Vector& target,
                                                    const Vector& w0, int steps) {
  Vector w = w0;
  Vector g = a * (w - target);
  Vector d = -g;
  std::vector<double> norms{g.norm()};
  for (int k = 0; k < steps; ++k) {
    const double gg = g.squaredNorm();
    if (gg == 0.0) break;
    const double alpha = gg / d.dot(a * d);
    w += alpha * d;
    const Vector g_next = g + alpha * (a * d);
    const double beta = g_next.squaredNorm() / gg;
    d = -g_next + beta * d;
    g = g_next;
    norms.push_back(g.norm());
  }
  return norms;
}

}  // namespace scg::test
