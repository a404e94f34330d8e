#include "scg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  if (bound == 1) return 0;
  // Rejection sampling over the largest multiple of bound that fits in 64 bits.
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

BatchSampler::BatchSampler(std::int64_t population) {
  if (population <= 0) throw std::invalid_argument("BatchSampler: population must be positive");
  pool_.resize(static_cast<std::size_t>(population));
  for (std::int64_t i = 0; i < population; ++i) pool_[static_cast<std::size_t>(i)] = i;
}

std::vector<std::int64_t> BatchSampler::sample(Rng& rng, std::int64_t b) {
  const std::int64_t n = population();
  if (b < 1 || b > n) throw std::invalid_argument("BatchSampler::sample: need 1 <= b <= population");
  for (std::int64_t j = 0; j < b; ++j) {
    const std::uint64_t offset = rng.below(static_cast<std::uint64_t>(n - j));
    std::swap(pool_[static_cast<std::size_t>(j)], pool_[static_cast<std::size_t>(j + static_cast<std::int64_t>(offset))]);
  }
  std::vector<std::int64_t> out(pool_.begin(), pool_.begin() + static_cast<std::ptrdiff_t>(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace scg
