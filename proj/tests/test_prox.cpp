#include <doctest.h>

#include "common.hpp"
#include "scg/prox.hpp"

using namespace scg;

TEST_CASE("soft threshold examples") {
  Vector v(3);
  v << 1.5, -0.2, 0.0;
  const Vector out = soft_threshold(v, 1.0);
  CHECK(out[0] == 0.5);
  CHECK(out[1] == 0.0);
  CHECK(out[2] == 0.0);

  CHECK(soft_threshold(v, 0.0) == v);                      // identity at zero threshold
  CHECK(soft_threshold(Vector::Zero(4), 2.0).norm() == 0.0);
  CHECK_THROWS_AS(soft_threshold(v, -0.1), std::invalid_argument);
}

TEST_CASE("soft threshold is non-expansive") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Vector x = test::random_vector(rng, 12, 3.0);
    const Vector z = test::random_vector(rng, 12, 3.0);
    const double theta = rng.uniform(0.0, 2.0);
    CHECK((soft_threshold(x, theta) - soft_threshold(z, theta)).norm() <=
          (x - z).norm() * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("proximal step") {
  Rng rng(42);
  const Vector w = test::random_vector(rng, 6);
  const Vector d = test::random_vector(rng, 6);

  // lambda = 0 reduces to the plain step, exactly.
  CHECK(prox_step(w, d, 0.7, Regularizer{0.0}) == Vector(w + 0.7 * d));
  CHECK(prox_step(Vector::Zero(3), Vector::Zero(3), 1.0, Regularizer{0.5}).norm() == 0.0);

  Vector w1(1), d1(1);
  w1 << 1.0;
  d1 << -1.0;
  const Vector y = prox_step(w1, d1, 0.5, Regularizer{0.2});
  CHECK(y[0] == doctest::Approx(0.4).epsilon(1e-15));

  CHECK_THROWS_AS(prox_step(w, d, 0.0, Regularizer{0.1}), std::invalid_argument);
  CHECK_THROWS_AS(prox_step(w, d, -1.0, Regularizer{0.1}), std::invalid_argument);
}

TEST_CASE("gradient mapping") {
  Vector grad(2);
  grad << 2.0, -3.0;
  const Vector w = Vector::Zero(2);
  CHECK(gradient_mapping(w, 0.5, grad, Regularizer{0.0}) == grad);  // exact reduction

  CHECK(gradient_mapping(Vector::Zero(3), 1.0, Vector::Zero(3), Regularizer{0.7}).norm() == 0.0);

  Vector w1(1), g1(1);
  w1 << 1.0;
  g1 << 0.0;
  CHECK(gradient_mapping(w1, 1.0, g1, Regularizer{0.3})[0] == doctest::Approx(0.3).epsilon(1e-15));

  CHECK_THROWS_AS(gradient_mapping(w1, 0.0, g1, Regularizer{0.3}), std::invalid_argument);
}

TEST_CASE("vanishing mapping characterizes proximal fixed points") {
  Rng rng(43);
  const double lambda = 0.4;
  const double eta = 0.8;
  for (int rep = 0; rep < 50; ++rep) {
    Vector w = Vector::Zero(10);
    Vector grad(10);
    for (Index j = 0; j < 10; ++j) {
      if (rng.uniform() < 0.5) {
        w[j] = rng.uniform(0.1, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        grad[j] = -lambda * (w[j] > 0 ? 1.0 : -1.0);  // stationarity on the support
      } else {
        grad[j] = rng.uniform(-lambda, lambda);  // subdifferential condition off-support
      }
    }
    CHECK(gradient_mapping(w, eta, grad, Regularizer{lambda}).norm() <= 1e-14);

    Vector nudged = grad;
    nudged[0] += 3.0 * lambda;
    CHECK(gradient_mapping(w, eta, nudged, Regularizer{lambda}).norm() > 1e-6);

    // A vanishing mapping is the same as the proximal step not moving w.
    const Vector stepped = prox_step(w, Vector(-grad), eta, Regularizer{lambda});
    CHECK((stepped - w).norm() <= 1e-14);
  }
}

TEST_CASE("momentum combination") {
  Rng rng(44);
  const Vector w = test::random_vector(rng, 5);
  const Vector y = test::random_vector(rng, 5);
  CHECK(momentum_combine(w, y, 1.0) == y);  // exact at gamma = 1
  const Vector same = momentum_combine(w, w, 0.3);
  for (Index j = 0; j < 5; ++j) CHECK(same[j] == doctest::Approx(w[j]).epsilon(1e-15));

  Vector w1(1), y1(1);
  w1 << 0.0;
  y1 << 2.0;
  CHECK(momentum_combine(w1, y1, 0.25)[0] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(momentum_combine(w, y, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(momentum_combine(w, y, 1.5), std::invalid_argument);
}

TEST_CASE("unrolled effective-step identity") {
  // w - eta*gamma*H equals the momentum step applied to the proximal step,
  // where H is the step-based mapping (w - prox(w + eta*d))/eta.
  Rng rng(45);
  for (int rep = 0; rep < 200; ++rep) {
    const Vector w = test::random_vector(rng, 8, 2.0);
    const Vector d = test::random_vector(rng, 8, 2.0);
    const double eta = rng.uniform(0.05, 1.5);
    const double gamma = rng.uniform(0.05, 1.0);
    const Regularizer reg{rng.uniform(0.0, 0.5)};

    const Vector y = prox_step(w, d, eta, reg);
    const Vector mapping = (w - y) / eta;
    const Vector unrolled = w - eta * gamma * mapping;
    const Vector combined = momentum_combine(w, y, gamma);
    CHECK((unrolled - combined).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}
