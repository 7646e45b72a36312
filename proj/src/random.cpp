#include "mbposet/random.hpp"

#include <algorithm>
#include <limits>

namespace mbposet {

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::uniform(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % bound;
}

bool Xorshift64Star::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return uniform(denominator) < numerator;
}

Poset random_graded_poset(Xorshift64Star& rng, std::size_t max_elements, std::size_t max_levels) {
  const std::size_t total = 1 + rng.uniform(max_elements);
  const std::size_t levels = std::min<std::size_t>(total, 1 + rng.uniform(max_levels));
  std::vector<std::size_t> level_of(total);
  for (std::size_t i = 0; i < levels; ++i) level_of[i] = i;  // every level is inhabited
  for (std::size_t i = levels; i < total; ++i) level_of[i] = rng.uniform(levels);
  std::sort(level_of.begin(), level_of.end());

  std::vector<std::string> names;
  for (std::size_t i = 0; i < total; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> relations;
  for (std::size_t i = 0; i < total; ++i) {
    if (level_of[i] == 0) continue;
    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < total; ++j)
      if (level_of[j] + 1 == level_of[i]) below.push_back(j);
    const std::size_t forced = below[rng.uniform(below.size())];
    for (std::size_t j : below)
      if (j == forced || rng.chance(1, 2)) relations.emplace_back(names[j], names[i]);
  }
  return Poset::build(std::move(names), relations);
}

Poset random_poset(Xorshift64Star& rng, std::size_t elements, std::uint64_t percent) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> relations;
  for (std::size_t i = 0; i < elements; ++i)
    for (std::size_t j = i + 1; j < elements; ++j)
      if (rng.chance(percent, 100)) relations.emplace_back(names[i], names[j]);
  return Poset::build(std::move(names), relations);
}

SimplicialComplex random_complex(Xorshift64Star& rng, std::size_t vertices, std::size_t max_dim, std::size_t facets) {
  std::vector<std::string> names;
  for (std::size_t v = 1; v <= vertices; ++v) names.push_back(std::to_string(v));
  std::vector<Simplex> chosen;
  for (std::size_t f = 0; f < facets; ++f) {
    const std::size_t size = 1 + rng.uniform(std::min(max_dim + 1, vertices));
    std::vector<std::size_t> pool(vertices);
    for (std::size_t v = 0; v < vertices; ++v) pool[v] = v;
    Simplex s;
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t pick = i + rng.uniform(vertices - i);
      std::swap(pool[i], pool[pick]);
      s.push_back(pool[i]);
    }
    chosen.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(std::move(names), chosen);
}

Matching random_matching(Xorshift64Star& rng, const Poset& poset, std::uint64_t percent) {
  std::vector<Poset::Cover> covers = poset.cover_list();
  for (std::size_t i = covers.size(); i > 1; --i) std::swap(covers[i - 1], covers[rng.uniform(i)]);
  std::vector<bool> used(poset.size(), false);
  std::vector<Matching::Pair> pairs;
  for (const auto& [w, x] : covers) {
    if (used[w] || used[x] || !rng.chance(percent, 100)) continue;
    used[w] = used[x] = true;
    pairs.push_back({w, x});
  }
  return Matching::validate(poset, pairs);
}

}  // namespace mbposet
