#pragma once

#include "mbposet/matching.hpp"
#include "mbposet/morse_bott.hpp"
#include "mbposet/poset.hpp"

#include <optional>
#include <string>
#include <vector>

// Brute-force references that share no code with the library routines they check.
namespace oracles {

using mbposet::Element;

/// Every saturated chain from x down to a minimal element has the same length, for all x.
bool graded_by_chains(const mbposet::Poset& poset);

/// Arcs of H_M(X) rebuilt from the order relation.
std::vector<std::vector<Element>> matched_arcs(const mbposet::Poset& poset, const mbposet::Matching& matching);

/// All simple directed cycles, each listed once from its smallest node.
std::vector<std::vector<Element>> simple_cycles(const std::vector<std::vector<Element>>& arcs, std::size_t limit = 100000);

/// Basic-set label per element (unmatched elements label themselves; elements
/// sharing a cycle share a label) or -1 for transient elements.
std::vector<long> brute_basic_sets(const mbposet::Poset& poset, const mbposet::Matching& matching);

/// Conditions (1) and (2) of matching integration, constancy on basic sets and
/// the Morse conditions away from the recurrent set. Returns the first failure.
std::optional<std::string> integration_conditions(const mbposet::Poset& poset, const mbposet::Matching& matching,
                                                  const std::vector<mbposet::Rational>& f);

/// Removes beat points until none is left; true iff a single point remains.
bool beat_point_contractible(const mbposet::Poset& poset);

}  // namespace oracles
