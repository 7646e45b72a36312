#pragma once

#include "mbposet/cellular.hpp"
#include "mbposet/poset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mbposet {

/// A set of covers (x, y), x ≺ y, with every element in at most one pair.
class Matching {
 public:
  using Pair = std::pair<Element, Element>;  // (lower, upper)

  Matching() = default;
  /// Throws NotACover or ElementMatchedTwice.
  static Matching validate(const Poset& poset, const std::vector<Pair>& pairs);
  /// Same, by element names; also throws UnknownElement.
  static Matching validate_named(const Poset& poset, const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Pairs ordered by (lower, upper).
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t element_count() const noexcept { return partner_.size(); }

  bool is_matched(Element e) const { return partner_.at(e).has_value(); }
  std::optional<Element> partner(Element e) const { return partner_.at(e); }
  bool contains(Element lower, Element upper) const;
  /// t(x): the upper partner of a matched lower element.
  std::optional<Element> target(Element x) const;
  /// s(y): the lower partner of a matched upper element.
  std::optional<Element> source(Element y) const;

  Matching without(const std::vector<Pair>& removed) const;

 private:
  std::vector<Pair> pairs_;
  std::vector<std::optional<Element>> partner_;
  std::vector<bool> is_upper_;
};

/// H_M(X): matched covers point up, all other covers point down.
struct MatchedDigraph {
  std::vector<std::vector<Element>> successors;
  std::size_t arc_count() const;
};

MatchedDigraph matched_digraph(const Poset& poset, const Matching& matching);

/// Strongly connected components, each sorted, listed by smallest element.
std::vector<std::vector<Element>> strongly_connected_components(const MatchedDigraph& graph);

/// A critical element or a nontrivial strongly connected component.
struct BasicSet {
  std::vector<Element> elements;
  /// Degree of a critical element; lower degree p of an orbit class.
  std::size_t index = 0;
  bool critical = false;
};

struct BasicSetDecomposition {
  /// Ordered by smallest element.
  std::vector<BasicSet> sets;
  /// Position in `sets`, or nullopt for transient elements.
  std::vector<std::optional<std::size_t>> class_of;

  std::vector<Element> critical() const;
  std::vector<const BasicSet*> orbit_classes() const;
  std::vector<Element> recurrent_set() const;
};

/// Throws NotGraded when M has closed orbits on a non-graded poset.
BasicSetDecomposition basic_sets(const Poset& poset, const Matching& matching);

/// H_M(X) is acyclic.
bool is_morse_matching(const Poset& poset, const Matching& matching);

/// x_0 ≺ y_0 ≻ x_1 ≺ y_1 ≻ ... ≻ x_r = x_0 with (x_i, y_i) ∈ M.
struct ClosedOrbit {
  std::vector<Element> lower;  // x_0 .. x_{r-1}
  std::vector<Element> upper;  // y_0 .. y_{r-1}
  std::size_t index = 0;

  /// x_0, y_0, x_1, y_1, ...
  std::vector<Element> sequence() const;
  /// The same orbit started at x_k.
  ClosedOrbit rotated(std::size_t k) const;
};

struct MorseSmaleVerdict {
  bool morse_smale = false;
  /// One prime orbit per class, starting at the class's smallest degree-p element.
  std::vector<ClosedOrbit> orbits;
  /// Orbit classes (positions in BasicSetDecomposition::sets) that are not a single cycle.
  std::vector<std::size_t> offending_classes;
};

/// Structural check only: every orbit class is one simple cycle.
MorseSmaleVerdict morse_smale_orbits(const Poset& poset, const Matching& matching);
/// Requires the admissibility certificate.
MorseSmaleVerdict is_morse_smale(const AdmissiblePoset& poset, const Matching& matching);

/// Π −ε(y_i, x_i) ε(y_i, x_{i+1}).
Integer orbit_multiplicity(const CellularComplex& complex, const ClosedOrbit& orbit);

/// c_p: critical elements of degree p.
std::vector<std::size_t> critical_counts(const GradedPoset& poset, const Matching& matching);
/// A_p: prime orbits of index p, sized like the degrees of the poset.
std::vector<std::size_t> orbit_counts(const GradedPoset& poset, const std::vector<ClosedOrbit>& orbits);

struct Perturbation {
  Matching matching;
  std::vector<Matching::Pair> removed;
};

/// Removes from each orbit the pair whose source is its starting element.
/// Throws NotMorseSmale.
Perturbation perturb_to_morse(const Poset& poset, const Matching& matching);

}  // namespace mbposet
