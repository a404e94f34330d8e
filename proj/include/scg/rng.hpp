#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace scg {

/// Deterministic random source built on mt19937_64. The raw engine output is
/// fixed by the standard; bounded draws below avoid std::uniform_int_distribution,
/// whose mapping differs between standard libraries, so sequences are identical
/// across platforms for a given seed and call order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no libm distribution objects involved).
  double gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Uniform mini-batches without replacement: a partial Fisher-Yates pass over a
/// persistent index pool. Every size-b subset is equally likely regardless of
/// the pool permutation left behind by earlier draws, so consecutive calls stay
/// uniform at O(b log b) each (the log factor is the final sort).
class BatchSampler {
 public:
  explicit BatchSampler(std::int64_t population);

  /// b distinct indices in [0, population), sorted ascending.
  std::vector<std::int64_t> sample(Rng& rng, std::int64_t b);

  std::int64_t population() const { return static_cast<std::int64_t>(pool_.size()); }

 private:
  std::vector<std::int64_t> pool_;
};

}  // namespace scg
