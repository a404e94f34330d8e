#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "scg/losses.hpp"

using namespace scg;

namespace {
constexpr LossKind kAllKinds[] = {LossKind::kLorenz, LossKind::kNormalizedSigmoid,
                                  LossKind::kLogisticDifference, LossKind::kTwoLayerNn};
}

TEST_CASE("loss values at pinned points") {
  CHECK(loss_value(LossKind::kLorenz, 1.0) == 0.0);
  CHECK(loss_value(LossKind::kLorenz, 5.0) == 0.0);  // flat beyond the margin
  CHECK(loss_value(LossKind::kNormalizedSigmoid, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(loss_value(LossKind::kTwoLayerNn, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  // High-precision scalar evaluation: ln 2 - ln(1 + e^-1).
  CHECK(loss_value(LossKind::kLogisticDifference, 0.0) ==
        doctest::Approx(0.37988549304172248).epsilon(1e-14));
  CHECK_THROWS_AS(loss_value(LossKind::kLorenz, std::nan("")), std::invalid_argument);
}

TEST_CASE("gradient coefficients at pinned points") {
  CHECK(loss_grad_coeff(LossKind::kLorenz, 1.0) == 0.0);
  CHECK(loss_grad_coeff(LossKind::kLorenz, 2.0) == 0.0);
  CHECK(loss_grad_coeff(LossKind::kNormalizedSigmoid, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(loss_grad_coeff(LossKind::kTwoLayerNn, 0.0) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK_THROWS_AS(loss_grad_coeff(LossKind::kTwoLayerNn, std::nan("")), std::invalid_argument);
}

TEST_CASE("smoothness constants") {
  CHECK(lipschitz_constant(LossKind::kLorenz) == 4.0);
  CHECK(lipschitz_constant(LossKind::kNormalizedSigmoid) == 0.7698);
  CHECK(lipschitz_constant(LossKind::kLogisticDifference) == 0.092372);
  CHECK(lipschitz_constant(LossKind::kTwoLayerNn) == 0.15405);
}

TEST_CASE("names round-trip") {
  for (const LossKind kind : kAllKinds) CHECK(parse_loss_kind(loss_name(kind)) == kind);
  CHECK_THROWS_AS(parse_loss_kind("hinge"), std::invalid_argument);
}

TEST_CASE("coefficients match central finite differences of the values") {
  Rng rng(17);
  const double h = 1e-6;
  for (const LossKind kind : kAllKinds) {
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform(-10.0, 10.0);
      const double fd = (loss_value(kind, u + h) - loss_value(kind, u - h)) / (2.0 * h);
      const double g = loss_grad_coeff(kind, u);
      CHECK(std::abs(g - fd) / std::max(1.0, std::abs(g)) < 1e-6);
    }
  }
}

TEST_CASE("coefficient increments respect the published smoothness constants") {
  Rng rng(23);
  for (const LossKind kind : kAllKinds) {
    const double lips = lipschitz_constant(kind);
    for (int i = 0; i < 10000; ++i) {
      const double u = rng.uniform(-10.0, 10.0);
      const double v = rng.uniform(-10.0, 10.0);
      CHECK(std::abs(loss_grad_coeff(kind, u) - loss_grad_coeff(kind, v)) <=
            (lips + 1e-9) * std::abs(u - v));
    }
  }
}

TEST_CASE("value and coefficient are continuous across the flat-region boundary") {
  for (const double delta : {1e-6, 1e-8, 1e-10}) {
    CHECK(std::abs(loss_value(LossKind::kLorenz, 1.0 - delta)) <= delta * delta + 1e-15);
    CHECK(std::abs(loss_grad_coeff(LossKind::kLorenz, 1.0 - delta)) <= 2.0 * delta + 1e-15);
    CHECK(loss_value(LossKind::kLorenz, 1.0 + delta) == 0.0);
  }
}

TEST_CASE("extreme margins stay finite and tight") {
  for (const LossKind kind : kAllKinds) {
    for (const double u : {-700.0, -50.0, 50.0, 700.0}) {
      CHECK(std::isfinite(loss_value(kind, u)));
      CHECK(std::isfinite(loss_grad_coeff(kind, u)));
    }
  }
  CHECK(loss_value(LossKind::kNormalizedSigmoid, -700.0) == doctest::Approx(2.0));
  CHECK(loss_value(LossKind::kNormalizedSigmoid, 700.0) == 0.0);
}

TEST_CASE("batch objective basics") {
  const auto ds = test::make_classification_dataset(31, 12, 6);
  const Vector zero = Vector::Zero(6);
  const auto all = test::all_indices(12);
  CHECK(batch_loss(ds, LossKind::kNormalizedSigmoid, zero, all) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(batch_loss(ds, LossKind::kTwoLayerNn, zero, all) == doctest::Approx(0.25).epsilon(1e-15));

  Rng rng(4);
  const Vector w = test::random_vector(rng, 6);
  const Index one[] = {3};
  CHECK(batch_loss(ds, LossKind::kLorenz, w, one) ==
        doctest::Approx(loss_value(LossKind::kLorenz, ds.margin(3, w))).epsilon(1e-15));

  CHECK_THROWS_AS(batch_loss(ds, LossKind::kLorenz, w, std::span<const Index>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(batch_loss(ds, LossKind::kLorenz, Vector::Zero(5), all), std::invalid_argument);
}

TEST_CASE("batch gradient matches the finite-difference oracle") {
  Rng rng(6);
  for (const LossKind kind : kAllKinds) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto ds = test::make_classification_dataset(100 + rep, 14, 8);
      const Vector w = test::random_vector(rng, 8, 2.0);
      const auto all = test::all_indices(14);
      const Vector g = batch_gradient(ds, kind, w, all);
      const Vector fd = test::fd_batch_gradient(ds, kind, w, all);
      for (Index j = 0; j < 8; ++j)
        CHECK(std::abs(g[j] - fd[j]) / std::max(1.0, std::abs(g[j])) < 1e-6);
    }
  }
}

TEST_CASE("gradient vanishes on the flat region") {
  // All-positive rows with +1 labels and a large positive weight vector give
  // margins beyond the boundary.
  const auto ds = SparseDataset::from_rows({{{0, 0.5}, {1, 0.5}}, {{0, 0.9}}}, {1, 1}, 2);
  const Vector w = Vector::Constant(2, 10.0);
  const auto all = test::all_indices(2);
  CHECK(batch_gradient(ds, LossKind::kLorenz, w, all).norm() == 0.0);
}

TEST_CASE("gradients over a disjoint union combine linearly") {
  Rng rng(9);
  const auto ds = test::make_classification_dataset(50, 20, 7);
  const Vector w = test::random_vector(rng, 7);
  const std::vector<Index> first{0, 2, 4, 6, 8};
  const std::vector<Index> second{1, 3, 5, 7, 9, 11, 13};
  std::vector<Index> joined = first;
  joined.insert(joined.end(), second.begin(), second.end());
  std::sort(joined.begin(), joined.end());

  const Vector combined = batch_gradient(ds, LossKind::kNormalizedSigmoid, w, joined);
  const Vector expected = (5.0 * batch_gradient(ds, LossKind::kNormalizedSigmoid, w, first) +
                           7.0 * batch_gradient(ds, LossKind::kNormalizedSigmoid, w, second)) /
                          12.0;
  CHECK((combined - expected).lpNorm<Eigen::Infinity>() < 1e-15);
}

TEST_CASE("full objective") {
  const auto ds = SparseDataset::from_rows({{{0, 1.0}}}, {1}, 1);
  const Vector zero = Vector::Zero(1);
  CHECK(full_objective(ds, LossKind::kNormalizedSigmoid, zero, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(12);
  const auto big = test::make_classification_dataset(77, 30, 10);
  const Vector w = test::random_vector(rng, 10);
  CHECK(full_objective(big, LossKind::kLorenz, w, 0.0) ==
        doctest::Approx(full_loss(big, LossKind::kLorenz, w)).epsilon(1e-15));
  CHECK(full_objective(big, LossKind::kLorenz, Vector::Zero(10), 3.0) ==
        doctest::Approx(full_loss(big, LossKind::kLorenz, Vector::Zero(10))).epsilon(1e-15));
  CHECK_THROWS_AS(full_objective(big, LossKind::kLorenz, w, -1.0), std::invalid_argument);
}
