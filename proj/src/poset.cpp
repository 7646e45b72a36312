#include "mbposet/poset.hpp"

#include "mbposet/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mbposet {

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& relations) {
  if (elements.empty()) throw Error(ErrorCode::EmptyPoset, "a poset needs at least one element");
  Poset p;
  p.names_ = std::move(elements);
  for (Element i = 0; i < p.names_.size(); ++i) {
    if (!p.index_.emplace(p.names_[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "element '" + p.names_[i] + "' declared twice");
  }
  const std::size_t n = p.names_.size();
  std::vector<std::vector<Element>> direct_below(n);
  std::set<std::pair<Element, Element>> distinct;
  for (const auto& [lo, hi] : relations) {
    Element a = p.at(lo);
    Element b = p.at(hi);
    if (a == b) throw Error(ErrorCode::CycleDetected, "'" + lo + " < " + lo + "' is not a strict order");
    if (distinct.emplace(a, b).second) direct_below[b].push_back(a);
  }

  // Kahn's algorithm over lower -> upper arcs; leftovers lie on a cycle.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<Element>> above(n);
  for (Element x = 0; x < n; ++x)
    for (Element y : direct_below[x]) {
      above[y].push_back(x);
      ++pending[x];
    }
  std::vector<Element> order;
  order.reserve(n);
  for (Element x = 0; x < n; ++x)
    if (pending[x] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Element x : above[order[head]])
      if (--pending[x] == 0) order.push_back(x);
  if (order.size() != n) {
    for (Element x = 0; x < n; ++x)
      if (pending[x] != 0)
        throw Error(ErrorCode::CycleDetected, "relation has a cycle through '" + p.names_[x] + "'");
  }

  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (Element x : order)
    for (Element y : direct_below[x]) {
      below[x][y] = true;
      for (Element z = 0; z < n; ++z)
        if (below[y][z]) below[x][z] = true;
    }
  p.finish(below);
  std::size_t kept = 0;
  for (const auto& [a, b] : distinct)
    if (p.covers(a, b)) ++kept;
  p.redundant_ = relations.size() - kept;
  return p;
}

Poset Poset::empty_poset() { return Poset(); }

void Poset::finish(const std::vector<std::vector<bool>>& relation) {
  const std::size_t n = names_.size();
  below_ = relation;
  lower_.assign(n, {});
  upper_.assign(n, {});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!below_[x][y]) continue;
      bool is_cover = true;
      for (Element z = 0; z < n && is_cover; ++z)
        if (below_[x][z] && below_[z][y]) is_cover = false;
      if (is_cover) {
        lower_[x].push_back(y);
        upper_[y].push_back(x);
      }
    }
  for (auto& u : upper_) std::sort(u.begin(), u.end());
  for (auto& l : lower_) std::sort(l.begin(), l.end());

  // Heights in order of the number of elements below, which is a linear extension.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::size_t> count(n, 0);
  for (Element x = 0; x < n; ++x) count[x] = static_cast<std::size_t>(std::count(below_[x].begin(), below_[x].end(), true));
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return count[a] < count[b]; });
  heights_.assign(n, 0);
  for (Element x : order)
    for (Element w : lower_[x]) heights_[x] = std::max(heights_[x], heights_[w] + 1);
}

std::optional<Element> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::at(std::string_view name) const {
  auto e = find(name);
  if (!e) throw Error(ErrorCode::UnknownElement, "no element named '" + std::string(name) + "'");
  return *e;
}

bool Poset::covers(Element lower, Element upper) const {
  const auto& l = lower_.at(upper);
  return std::binary_search(l.begin(), l.end(), lower);
}

std::vector<Poset::Cover> Poset::cover_list() const {
  std::vector<Cover> out;
  for (Element w = 0; w < size(); ++w)
    for (Element x : upper_[w]) out.emplace_back(w, x);
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t total = 0;
  for (const auto& u : upper_) total += u.size();
  return total;
}

std::size_t Poset::height() const {
  std::size_t h = 0;
  for (auto v : heights_) h = std::max(h, v);
  return h;
}

std::vector<Element> Poset::normalized(std::span<const Element> subset) const {
  std::vector<bool> keep(size(), false);
  for (Element e : subset) keep.at(e) = true;
  std::vector<Element> out;
  for (Element e = 0; e < size(); ++e)
    if (keep[e]) out.push_back(e);
  return out;
}

Poset Poset::induced(std::span<const Element> subset) const {
  std::vector<Element> kept = normalized(subset);
  Poset p;
  const std::size_t k = kept.size();
  p.names_.reserve(k);
  for (Element i = 0; i < k; ++i) {
    p.names_.push_back(names_[kept[i]]);
    p.index_.emplace(p.names_.back(), i);
  }
  std::vector<std::vector<bool>> relation(k, std::vector<bool>(k, false));
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j) relation[i][j] = below_[kept[i]][kept[j]];
  p.finish(relation);
  return p;
}

std::vector<Element> Poset::down_set_elements(Element x, bool strict) const {
  std::vector<Element> out;
  for (Element y = 0; y < size(); ++y)
    if (below_.at(x)[y] || (!strict && y == x)) out.push_back(y);
  return out;
}

std::vector<Element> Poset::up_set_elements(Element x, bool strict) const {
  std::vector<Element> out;
  for (Element y = 0; y < size(); ++y)
    if (below_[y].at(x) || (!strict && y == x)) out.push_back(y);
  return out;
}

std::vector<Element> Poset::down_closure(std::span<const Element> elements) const {
  std::vector<bool> keep(size(), false);
  for (Element x : elements) {
    keep.at(x) = true;
    for (Element y = 0; y < size(); ++y)
      if (below_[x][y]) keep[y] = true;
  }
  std::vector<Element> out;
  for (Element y = 0; y < size(); ++y)
    if (keep[y]) out.push_back(y);
  return out;
}

std::vector<Element> Poset::linear_extension() const {
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return heights_[a] < heights_[b]; });
  return order;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.names_ == b.names_ && a.lower_ == b.lower_;
}

std::optional<GradedPoset> GradedPoset::from(const Poset& poset) {
  // U_x is homogeneous for every x iff every cover raises the height by one.
  for (const auto& [w, x] : poset.cover_list())
    if (poset.height(x) != poset.height(w) + 1) return std::nullopt;
  return GradedPoset(poset);
}

GradedPoset GradedPoset::require(const Poset& poset) {
  auto g = from(poset);
  if (!g) throw Error(ErrorCode::NotGraded, "poset is not graded");
  return *std::move(g);
}

std::vector<Element> GradedPoset::level(std::size_t p) const {
  std::vector<Element> out;
  for (Element x = 0; x < poset_.size(); ++x)
    if (degree(x) == p) out.push_back(x);
  return out;
}

std::vector<Element> GradedPoset::skeleton_elements(std::size_t p) const {
  std::vector<Element> out;
  for (Element x = 0; x < poset_.size(); ++x)
    if (degree(x) <= p) out.push_back(x);
  return out;
}

HeightReport height_and_degree(const Poset& poset) {
  HeightReport r;
  for (Element x = 0; x < poset.size(); ++x) r.heights.push_back(poset.height(x));
  r.graded_poset = GradedPoset::from(poset);
  r.graded = r.graded_poset.has_value();
  return r;
}

}  // namespace mbposet
