#include "mbposet/matching.hpp"

#include "mbposet/error.hpp"

#include <algorithm>
#include <functional>

namespace mbposet {

Matching Matching::validate(const Poset& poset, const std::vector<Pair>& pairs) {
  Matching m;
  m.partner_.assign(poset.size(), std::nullopt);
  m.is_upper_.assign(poset.size(), false);
  for (const auto& [x, y] : pairs) {
    if (x >= poset.size() || y >= poset.size() || !poset.covers(x, y))
      throw Error(ErrorCode::NotACover, "(" + (x < poset.size() ? poset.name(x) : std::to_string(x)) + ", " +
                                            (y < poset.size() ? poset.name(y) : std::to_string(y)) + ") is not a cover");
    for (Element e : {x, y})
      if (m.partner_[e]) throw Error(ErrorCode::ElementMatchedTwice, poset.name(e) + " occurs in two pairs");
    m.partner_[x] = y;
    m.partner_[y] = x;
    m.is_upper_[y] = true;
    m.pairs_.push_back({x, y});
  }
  std::sort(m.pairs_.begin(), m.pairs_.end());
  return m;
}

Matching Matching::validate_named(const Poset& poset, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Pair> indexed;
  for (const auto& [x, y] : pairs) indexed.push_back({poset.at(x), poset.at(y)});
  return validate(poset, indexed);
}

bool Matching::contains(Element lower, Element upper) const {
  return partner_.at(lower) == upper && is_upper_.at(upper);
}

std::optional<Element> Matching::target(Element x) const {
  if (!partner_.at(x) || is_upper_.at(x)) return std::nullopt;
  return partner_[x];
}

std::optional<Element> Matching::source(Element y) const {
  if (!partner_.at(y) || !is_upper_.at(y)) return std::nullopt;
  return partner_[y];
}

Matching Matching::without(const std::vector<Pair>& removed) const {
  Matching m = *this;
  for (const auto& [x, y] : removed) {
    if (!contains(x, y)) continue;
    m.partner_[x].reset();
    m.partner_[y].reset();
    m.is_upper_[y] = false;
    m.pairs_.erase(std::find(m.pairs_.begin(), m.pairs_.end(), Pair{x, y}));
  }
  return m;
}

std::size_t MatchedDigraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

MatchedDigraph matched_digraph(const Poset& poset, const Matching& matching) {
  MatchedDigraph g;
  g.successors.resize(poset.size());
  for (const auto& [w, x] : poset.cover_list()) {
    if (matching.contains(w, x))
      g.successors[w].push_back(x);
    else
      g.successors[x].push_back(w);
  }
  for (auto& s : g.successors) std::sort(s.begin(), s.end());
  return g;
}

std::vector<std::vector<Element>> strongly_connected_components(const MatchedDigraph& graph) {
  const std::size_t n = graph.successors.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Element> stack;
  std::vector<std::vector<Element>> components;
  std::size_t counter = 0;

  std::function<void(Element)> connect = [&](Element v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Element w : graph.successors[v]) {
      if (index[w] == unvisited) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Element> component;
      Element w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (Element v = 0; v < n; ++v)
    if (index[v] == unvisited) connect(v);
  std::sort(components.begin(), components.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<Element> BasicSetDecomposition::critical() const {
  std::vector<Element> out;
  for (const auto& s : sets)
    if (s.critical) out.push_back(s.elements.front());
  return out;
}

std::vector<const BasicSet*> BasicSetDecomposition::orbit_classes() const {
  std::vector<const BasicSet*> out;
  for (const auto& s : sets)
    if (!s.critical) out.push_back(&s);
  return out;
}

std::vector<Element> BasicSetDecomposition::recurrent_set() const {
  std::vector<Element> out;
  for (Element e = 0; e < class_of.size(); ++e)
    if (class_of[e]) out.push_back(e);
  return out;
}

BasicSetDecomposition basic_sets(const Poset& poset, const Matching& matching) {
  const auto components = strongly_connected_components(matched_digraph(poset, matching));
  BasicSetDecomposition out;
  out.class_of.assign(poset.size(), std::nullopt);
  bool graded_checked = false;
  for (const auto& component : components) {
    BasicSet set;
    if (component.size() > 1) {
      if (!graded_checked) {
        if (!GradedPoset::from(poset)) throw Error(ErrorCode::NotGraded, "orbit indices need a graded poset");
        graded_checked = true;
      }
      set.elements = component;
      set.index = poset.height(component.front());
      for (Element e : component) set.index = std::min(set.index, poset.height(e));
    } else if (!matching.is_matched(component.front())) {
      set.elements = component;
      set.index = poset.height(component.front());
      set.critical = true;
    } else {
      continue;
    }
    for (Element e : set.elements) out.class_of[e] = out.sets.size();
    out.sets.push_back(std::move(set));
  }
  return out;
}

bool is_morse_matching(const Poset& poset, const Matching& matching) {
  for (const auto& c : strongly_connected_components(matched_digraph(poset, matching)))
    if (c.size() > 1) return false;
  return true;
}

std::vector<Element> ClosedOrbit::sequence() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    out.push_back(lower[i]);
    out.push_back(upper[i]);
  }
  return out;
}

ClosedOrbit ClosedOrbit::rotated(std::size_t k) const {
  ClosedOrbit r = *this;
  const auto shift = static_cast<std::ptrdiff_t>(k % lower.size());
  std::rotate(r.lower.begin(), r.lower.begin() + shift, r.lower.end());
  std::rotate(r.upper.begin(), r.upper.begin() + shift, r.upper.end());
  return r;
}

MorseSmaleVerdict morse_smale_orbits(const Poset& poset, const Matching& matching) {
  const MatchedDigraph graph = matched_digraph(poset, matching);
  const BasicSetDecomposition decomposition = basic_sets(poset, matching);
  MorseSmaleVerdict verdict;
  for (std::size_t c = 0; c < decomposition.sets.size(); ++c) {
    const BasicSet& set = decomposition.sets[c];
    if (set.critical) continue;
    std::vector<std::size_t> in_degree(poset.size(), 0);
    std::vector<Element> next(poset.size(), 0);
    bool simple = true;
    for (Element v : set.elements) {
      std::size_t out_degree = 0;
      for (Element w : graph.successors[v])
        if (decomposition.class_of[w] == c) {
          ++out_degree;
          ++in_degree[w];
          next[v] = w;
        }
      simple = simple && out_degree == 1;
    }
    for (Element v : set.elements) simple = simple && in_degree[v] == 1;
    if (!simple) {
      verdict.offending_classes.push_back(c);
      continue;
    }
    ClosedOrbit orbit;
    orbit.index = set.index;
    Element start = *std::find_if(set.elements.begin(), set.elements.end(),
                                  [&](Element e) { return poset.height(e) == set.index; });
    Element x = start;
    do {
      orbit.lower.push_back(x);
      orbit.upper.push_back(next[x]);
      x = next[next[x]];
    } while (x != start);
    verdict.orbits.push_back(std::move(orbit));
  }
  verdict.morse_smale = verdict.offending_classes.empty();
  return verdict;
}

MorseSmaleVerdict is_morse_smale(const AdmissiblePoset& poset, const Matching& matching) {
  return morse_smale_orbits(poset.poset(), matching);
}

Integer orbit_multiplicity(const CellularComplex& complex, const ClosedOrbit& orbit) {
  Integer product = 1;
  const std::size_t r = orbit.lower.size();
  for (std::size_t i = 0; i < r; ++i)
    product *= -complex.incidence(orbit.upper[i], orbit.lower[i]) * complex.incidence(orbit.upper[i], orbit.lower[(i + 1) % r]);
  return product;
}

std::vector<std::size_t> critical_counts(const GradedPoset& poset, const Matching& matching) {
  std::vector<std::size_t> c(poset.dimension() + 1, 0);
  for (Element e = 0; e < poset.poset().size(); ++e)
    if (!matching.is_matched(e)) ++c[poset.degree(e)];
  return c;
}

std::vector<std::size_t> orbit_counts(const GradedPoset& poset, const std::vector<ClosedOrbit>& orbits) {
  std::vector<std::size_t> a(poset.dimension() + 1, 0);
  for (const auto& o : orbits) ++a.at(o.index);
  return a;
}

Perturbation perturb_to_morse(const Poset& poset, const Matching& matching) {
  MorseSmaleVerdict verdict = morse_smale_orbits(poset, matching);
  if (!verdict.morse_smale) throw Error(ErrorCode::NotMorseSmale, "an orbit class is not a single closed orbit");
  Perturbation out;
  for (const auto& o : verdict.orbits) out.removed.push_back({o.lower.front(), o.upper.front()});
  out.matching = matching.without(out.removed);
  return out;
}

}  // namespace mbposet
