#pragma once

#include <cstdint>
#include <random>

#include "fod/rational.hpp"

namespace fod {

using Seed = std::uint64_t;

/// splitmix64 finalizer; derives independent child seeds from (seed, index)
/// so parallel or reordered tasks see identical streams.
std::uint64_t mix_seed(Seed seed, std::uint64_t index);

/// Deterministic generator. std::mt19937_64 output is fixed by the standard;
/// the distributions below are implemented here so results do not depend on
/// the standard library vendor.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// p/q with p uniform in [-height, height] and q uniform in
  /// [-height, height] \ {0}.
  Rational rational(std::int64_t height);

  Rng split(std::uint64_t index) { return Rng(mix_seed(engine_(), index)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fod
