#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mbposet {

/// Position of an element in the declared element order of its poset.
using Element = std::size_t;

/// Finite poset stored by its Hasse diagram. Immutable after construction.
/// Iteration follows the declared element order everywhere.
class Poset {
 public:
  using Cover = std::pair<Element, Element>;  // (lower, upper)

  /// Builds the poset generated by `relations` (pairs w < x). The relation is
  /// reduced to its Hasse diagram. Throws DuplicateElement, UnknownElement,
  /// CycleDetected or EmptyPoset.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

  /// The empty poset. Only reachable as the result of a subposet operation.
  static Poset empty_poset();

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownElement.
  Element at(std::string_view name) const;

  bool less(Element a, Element b) const { return below_[b][a]; }
  bool leq(Element a, Element b) const { return a == b || below_[b][a]; }
  bool covers(Element lower, Element upper) const;

  const std::vector<Element>& lower_covers(Element x) const { return lower_.at(x); }
  const std::vector<Element>& upper_covers(Element x) const { return upper_.at(x); }
  /// All covers ordered by (lower, upper).
  std::vector<Cover> cover_list() const;
  std::size_t cover_count() const;

  /// Length of the longest chain in U_x.
  std::size_t height(Element x) const { return heights_.at(x); }
  /// Height of the whole poset; zero for the empty poset.
  std::size_t height() const;

  /// Number of input relations dropped because they were implied by others.
  std::size_t redundant_relations() const noexcept { return redundant_; }

  /// Induced subposet on `subset` (any order, duplicates ignored), kept in
  /// declared order.
  Poset induced(std::span<const Element> subset) const;
  /// Elements of the induced subposet, in declared order.
  std::vector<Element> normalized(std::span<const Element> subset) const;

  /// U_x (strict = false) or Û_x (strict = true).
  std::vector<Element> down_set_elements(Element x, bool strict) const;
  /// F_x (strict = false) or F̂_x (strict = true).
  std::vector<Element> up_set_elements(Element x, bool strict) const;
  Poset down_set(Element x, bool strict) const { return induced(down_set_elements(x, strict)); }
  Poset up_set(Element x, bool strict) const { return induced(up_set_elements(x, strict)); }

  /// Union of U_x over the given elements.
  std::vector<Element> down_closure(std::span<const Element> elements) const;

  /// A linear extension: elements sorted by (height, declared position).
  std::vector<Element> linear_extension() const;

  /// Same element names in the same order and the same covers.
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  Poset() = default;
  void finish(const std::vector<std::vector<bool>>& relation);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::vector<bool>> below_;  // below_[x][y]: y < x
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::size_t> heights_;
  std::size_t redundant_ = 0;
};

/// A poset whose every U_x is homogeneous; degree equals height.
class GradedPoset {
 public:
  /// nullopt when `poset` is not graded.
  static std::optional<GradedPoset> from(const Poset& poset);
  /// Throws NotGraded.
  static GradedPoset require(const Poset& poset);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t degree(Element x) const { return poset_.height(x); }
  std::size_t dimension() const { return poset_.height(); }
  /// X^(=p), in declared order.
  std::vector<Element> level(std::size_t p) const;
  /// X^(p) = {x : deg(x) <= p}, in declared order.
  std::vector<Element> skeleton_elements(std::size_t p) const;
  Poset skeleton(std::size_t p) const { return poset_.induced(skeleton_elements(p)); }

 private:
  explicit GradedPoset(Poset poset) : poset_(std::move(poset)) {}
  Poset poset_;
};

struct HeightReport {
  std::vector<std::size_t> heights;
  bool graded = false;
  std::optional<GradedPoset> graded_poset;
};

HeightReport height_and_degree(const Poset& poset);

}  // namespace mbposet
