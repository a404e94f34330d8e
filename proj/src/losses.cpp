#include "scg/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace scg {

namespace {

void check_finite_margin(double u) {
  if (std::isnan(u)) throw std::invalid_argument("loss: NaN margin");
}

// 1/(1+e^-x), evaluated through exp of a negative magnitude on both branches.
double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// ln(1+e^x) without overflow.
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

}  // namespace

std::string_view loss_name(LossKind kind) {
  switch (kind) {
    case LossKind::kLorenz: return "lorenz";
    case LossKind::kNormalizedSigmoid: return "normalized_sigmoid";
    case LossKind::kLogisticDifference: return "logistic_difference";
    case LossKind::kTwoLayerNn: return "two_layer_nn";
  }
  throw std::invalid_argument("unknown loss kind");
}

LossKind parse_loss_kind(std::string_view name) {
  if (name == "lorenz") return LossKind::kLorenz;
  if (name == "normalized_sigmoid") return LossKind::kNormalizedSigmoid;
  if (name == "logistic_difference") return LossKind::kLogisticDifference;
  if (name == "two_layer_nn") return LossKind::kTwoLayerNn;
  throw std::invalid_argument("unknown loss '" + std::string(name) + "'");
}

double loss_value(LossKind kind, double u) {
  check_finite_margin(u);
  switch (kind) {
    case LossKind::kLorenz: {
      if (u > 1.0) return 0.0;
      const double r = u - 1.0;
      return std::log1p(r * r);
    }
    case LossKind::kNormalizedSigmoid: {
      // 1 - tanh(u) rewritten to keep full relative precision for large |u|.
      if (u >= 0.0) {
        const double e = std::exp(-2.0 * u);
        return 2.0 * e / (1.0 + e);
      }
      return 2.0 / (1.0 + std::exp(2.0 * u));
    }
    case LossKind::kLogisticDifference:
      return softplus(-u) - softplus(-u - 1.0);
    case LossKind::kTwoLayerNn: {
      const double s = sigmoid(-u);  // = 1 - sigmoid(u)
      return s * s;
    }
  }
  throw std::invalid_argument("unknown loss kind");
}

double loss_grad_coeff(LossKind kind, double u) {
  check_finite_margin(u);
  switch (kind) {
    case LossKind::kLorenz: {
      if (u > 1.0) return 0.0;
      const double r = u - 1.0;
      return 2.0 * r / (1.0 + r * r);
    }
    case LossKind::kNormalizedSigmoid: {
      // -4/(e^u+e^-u)^2 = -sech(u)^2, symmetric in u.
      const double e = std::exp(-2.0 * std::abs(u));
      const double denom = 1.0 + e;
      return -4.0 * e / (denom * denom);
    }
    case LossKind::kLogisticDifference:
      // Analytic derivative of softplus(-u) - softplus(-u-1).
      return sigmoid(-u - 1.0) - sigmoid(-u);
    case LossKind::kTwoLayerNn: {
      const double s = sigmoid(u);
      const double t = sigmoid(-u);
      return -2.0 * s * t * t;
    }
  }
  throw std::invalid_argument("unknown loss kind");
}

double lipschitz_constant(LossKind kind) {
  switch (kind) {
    case LossKind::kLorenz: return 4.0;
    case LossKind::kNormalizedSigmoid: return 0.7698;
    case LossKind::kLogisticDifference: return 0.092372;
    case LossKind::kTwoLayerNn: return 0.15405;
  }
  throw std::invalid_argument("unknown loss kind");
}

double batch_loss(const SparseDataset& ds, LossKind kind, const Vector& w,
                  std::span<const Index> batch) {
  if (batch.empty()) throw std::invalid_argument("batch_loss: empty batch");
  if (w.size() != ds.dim()) throw std::invalid_argument("batch_loss: dimension mismatch");
  double acc = 0.0;
  for (const Index i : batch) acc += loss_value(kind, ds.margin(i, w));
  return acc / static_cast<double>(batch.size());
}

Vector batch_gradient(const SparseDataset& ds, LossKind kind, const Vector& w,
                      std::span<const Index> batch) {
  if (batch.empty()) throw std::invalid_argument("batch_gradient: empty batch");
  if (w.size() != ds.dim()) throw std::invalid_argument("batch_gradient: dimension mismatch");
  Vector grad = Vector::Zero(ds.dim());
  const double inv_b = 1.0 / static_cast<double>(batch.size());
  for (const Index i : batch) {
    const double coef = loss_grad_coeff(kind, ds.margin(i, w)) * ds.label(i) * inv_b;
    ds.add_row_scaled(i, coef, grad);
  }
  return grad;
}

double full_loss(const SparseDataset& ds, LossKind kind, const Vector& w) {
  if (w.size() != ds.dim()) throw std::invalid_argument("full_loss: dimension mismatch");
  double acc = 0.0;
  for (Index i = 0; i < ds.num_examples(); ++i) acc += loss_value(kind, ds.margin(i, w));
  return acc / static_cast<double>(ds.num_examples());
}

Vector full_gradient(const SparseDataset& ds, LossKind kind, const Vector& w) {
  if (w.size() != ds.dim()) throw std::invalid_argument("full_gradient: dimension mismatch");
  Vector grad = Vector::Zero(ds.dim());
  const double inv_n = 1.0 / static_cast<double>(ds.num_examples());
  for (Index i = 0; i < ds.num_examples(); ++i) {
    const double coef = loss_grad_coeff(kind, ds.margin(i, w)) * ds.label(i) * inv_n;
    ds.add_row_scaled(i, coef, grad);
  }
  return grad;
}

double full_objective(const SparseDataset& ds, LossKind kind, const Vector& w, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("full_objective: lambda must be >= 0");
  return full_loss(ds, kind, w) + lambda * w.lpNorm<1>();
}

}  // namespace scg
