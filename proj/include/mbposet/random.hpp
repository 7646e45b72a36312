#pragma once

#include "mbposet/matching.hpp"
#include "mbposet/poset.hpp"
#include "mbposet/simplicial.hpp"

#include <cstdint>

namespace mbposet {

/// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * 0x2545F4914F6CDD1D.
/// A zero seed is replaced by a fixed nonzero constant.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::uint64_t state_;
};

/// Elements x0, x1, ... arranged in levels; every element above level 0 covers
/// at least one element of the level below and nothing else, so the result is
/// graded.
Poset random_graded_poset(Xorshift64Star& rng, std::size_t max_elements, std::size_t max_levels = 4);

/// Random order on n elements: i < j added with the given probability, then closed.
Poset random_poset(Xorshift64Star& rng, std::size_t elements, std::uint64_t percent);

/// Union of random facets on vertices 1..vertices with dimension at most max_dim.
SimplicialComplex random_complex(Xorshift64Star& rng, std::size_t vertices, std::size_t max_dim, std::size_t facets);

/// Greedy matching over the covers in random order, keeping each available
/// cover with the given probability.
Matching random_matching(Xorshift64Star& rng, const Poset& poset, std::uint64_t percent = 60);

}  // namespace mbposet
