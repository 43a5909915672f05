#include "fod/random.hpp"

#include <limits>

namespace fod {

std::uint64_t mix_seed(Seed seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // rejection sampling keeps the draw exactly uniform
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t height) {
  const std::int64_t p = uniform(-height, height);
  std::int64_t q = uniform(-height, height - 1);
  if (q >= 0) ++q;  // skip zero
  Rational r{Integer(static_cast<long>(p)), Integer(static_cast<long>(q))};
  r.canonicalize();
  return r;
}

}  // namespace fod
