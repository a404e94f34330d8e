#pragma once

#include <span>
#include <string_view>

#include "scg/dataset.hpp"

namespace scg {

/// The four nonconvex margin losses used by the sparse classification models.
/// Each loss is a scalar function of the margin u = b_i * <a_i, w>.
enum class LossKind {
  kLorenz,              // ln(1 + (u-1)^2) for u <= 1, else 0
  kNormalizedSigmoid,   // 1 - tanh(u)
  kLogisticDifference,  // ln(1+e^-u) - ln(1+e^-(u+1))
  kTwoLayerNn,          // (1 - 1/(1+e^-u))^2
};

std::string_view loss_name(LossKind kind);
LossKind parse_loss_kind(std::string_view name);

/// Loss value at margin u. Throws on NaN input.
double loss_value(LossKind kind, double margin);

/// Scalar g(u) such that the gradient of the loss w.r.t. w is g(u) * b_i * a_i.
/// Continuous in u for every kind. Throws on NaN input.
double loss_grad_coeff(LossKind kind, double margin);

/// Smoothness constant of the scalar loss; with l2-normalized rows this also
/// bounds the average smoothness of the finite sum.
double lipschitz_constant(LossKind kind);

/// Mean loss over the batch: (1/|B|) sum_{i in B} loss(margin_i).
double batch_loss(const SparseDataset& ds, LossKind kind, const Vector& w,
                  std::span<const Index> batch);

/// Mean gradient over the batch, accumulated sparsely in index order into a
/// dense vector (sequential for bit-reproducible sums).
Vector batch_gradient(const SparseDataset& ds, LossKind kind, const Vector& w,
                      std::span<const Index> batch);

double full_loss(const SparseDataset& ds, LossKind kind, const Vector& w);
Vector full_gradient(const SparseDataset& ds, LossKind kind, const Vector& w);

/// P(w) = f(w) + lambda * ||w||_1 over the full dataset. lambda must be >= 0.
double full_objective(const SparseDataset& ds, LossKind kind, const Vector& w, double lambda);

}  // namespace scg
