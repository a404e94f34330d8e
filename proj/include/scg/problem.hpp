#pragma once

#include <span>

#include "scg/losses.hpp"

namespace scg {

/// A finite-sum objective f(w) = (1/n) sum_i f_i(w) exposed through batch
/// oracles. Implementations must be pure in (w, batch) so optimizer runs can
/// share one instance read-only.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual Index num_examples() const = 0;
  virtual Index dim() const = 0;

  /// Mean loss over the batch.
  virtual double batch_loss(const Vector& w, std::span<const Index> batch) const = 0;

  /// Mean gradient over the batch.
  virtual Vector batch_gradient(const Vector& w, std::span<const Index> batch) const = 0;

  virtual double full_loss(const Vector& w) const;
  virtual Vector full_gradient(const Vector& w) const;
};

/// The sparse classification objective: one of the margin losses over a
/// dataset. Holds a reference; the dataset must outlive the problem.
class LossProblem final : public Problem {
 public:
  LossProblem(const SparseDataset& ds, LossKind kind) : ds_(&ds), kind_(kind) {}

  Index num_examples() const override { return ds_->num_examples(); }
  Index dim() const override { return ds_->dim(); }
  double batch_loss(const Vector& w, std::span<const Index> batch) const override {
    return scg::batch_loss(*ds_, kind_, w, batch);
  }
  Vector batch_gradient(const Vector& w, std::span<const Index> batch) const override {
    return scg::batch_gradient(*ds_, kind_, w, batch);
  }
  double full_loss(const Vector& w) const override { return scg::full_loss(*ds_, kind_, w); }
  Vector full_gradient(const Vector& w) const override { return scg::full_gradient(*ds_, kind_, w); }

  LossKind kind() const { return kind_; }

 private:
  const SparseDataset* ds_;
  LossKind kind_;
};

}  // namespace scg
