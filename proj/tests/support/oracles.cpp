#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracles {

using namespace mbposet;

bool graded_by_chains(const Poset& poset) {
  const std::size_t n = poset.size();
  // Cover relation recomputed from the order: x covers w iff w < x with nothing between.
  auto covers = [&](Element w, Element x) {
    if (!poset.less(w, x)) return false;
    for (Element z = 0; z < n; ++z)
      if (poset.less(w, z) && poset.less(z, x)) return false;
    return true;
  };
  for (Element x = 0; x < n; ++x) {
    std::vector<std::size_t> lengths;
    std::function<void(Element, std::size_t)> descend = [&](Element y, std::size_t len) {
      bool minimal = true;
      for (Element w = 0; w < n; ++w)
        if (covers(w, y)) {
          minimal = false;
          descend(w, len + 1);
        }
      if (minimal) lengths.push_back(len);
    };
    descend(x, 0);
    if (std::adjacent_find(lengths.begin(), lengths.end(), std::not_equal_to<>()) != lengths.end()) return false;
  }
  return true;
}

std::vector<std::vector<Element>> matched_arcs(const Poset& poset, const Matching& matching) {
  const std::size_t n = poset.size();
  std::vector<std::vector<Element>> arcs(n);
  for (Element w = 0; w < n; ++w)
    for (Element x = 0; x < n; ++x) {
      if (!poset.less(w, x)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z) cover = !(poset.less(w, z) && poset.less(z, x));
      if (!cover) continue;
      bool matched = false;
      for (const auto& [a, b] : matching.pairs()) matched = matched || (a == w && b == x);
      if (matched)
        arcs[w].push_back(x);
      else
        arcs[x].push_back(w);
    }
  return arcs;
}

std::vector<std::vector<Element>> simple_cycles(const std::vector<std::vector<Element>>& arcs, std::size_t limit) {
  std::vector<std::vector<Element>> cycles;
  const std::size_t n = arcs.size();
  std::vector<Element> path;
  std::vector<bool> on_path(n, false);
  std::function<void(Element, Element)> extend = [&](Element start, Element v) {
    if (cycles.size() >= limit) return;
    for (Element w : arcs[v]) {
      if (w == start) {
        cycles.push_back(path);
      } else if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = true;
        extend(start, w);
        on_path[w] = false;
        path.pop_back();
      }
    }
  };
  for (Element s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  return cycles;
}

std::vector<long> brute_basic_sets(const Poset& poset, const Matching& matching) {
  const std::size_t n = poset.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  std::function<Element(Element)> root = [&](Element e) { return parent[e] == e ? e : parent[e] = root(parent[e]); };
  std::vector<bool> recurrent(n, false);
  for (Element e = 0; e < n; ++e) recurrent[e] = !matching.partner(e).has_value();
  for (const auto& cycle : simple_cycles(matched_arcs(poset, matching))) {
    for (Element e : cycle) {
      recurrent[e] = true;
      parent[root(e)] = root(cycle.front());
    }
  }
  std::vector<long> label(n, -1);
  for (Element e = 0; e < n; ++e)
    if (recurrent[e]) label[e] = static_cast<long>(root(e));
  return label;
}

std::optional<std::string> integration_conditions(const Poset& poset, const Matching& matching,
                                                  const std::vector<Rational>& f) {
  const std::size_t n = poset.size();
  const std::vector<long> label = brute_basic_sets(poset, matching);
  auto name = [&](Element e) { return poset.name(e); };
  auto is_matched_pair = [&](Element x, Element y) {
    for (const auto& [a, b] : matching.pairs())
      if (a == x && b == y) return true;
    return false;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (label[x] >= 0 && label[x] == label[y] && f[x] != f[y])
        return "not constant on the basic set of " + name(x) + " and " + name(y);

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!poset.less(x, y) || poset.height(y) != poset.height(x) + 1) continue;
      if (label[x] < 0) {
        if (is_matched_pair(x, y) ? !(f[x] >= f[y]) : !(f[x] < f[y]))
          return "condition (1) fails at " + name(x) + " < " + name(y);
      } else {
        const bool related = label[x] == label[y];
        if (related ? f[x] != f[y] : !(f[x] < f[y])) return "condition (2) fails at " + name(x) + " < " + name(y);
      }
    }

  // Morse conditions at transient elements.
  for (Element x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    std::size_t up = 0, down = 0;
    for (Element y = 0; y < n; ++y) {
      if (poset.less(x, y) && poset.height(y) == poset.height(x) + 1 && f[x] >= f[y]) ++up;
      if (poset.less(y, x) && poset.height(x) == poset.height(y) + 1 && f[y] >= f[x]) ++down;
    }
    if (up > 1 || down > 1) return "not a Morse function at transient element " + name(x);
  }
  return std::nullopt;
}

bool beat_point_contractible(const Poset& poset) {
  std::vector<Element> alive(poset.size());
  std::iota(alive.begin(), alive.end(), Element{0});
  bool removed = true;
  while (removed && alive.size() > 1) {
    removed = false;
    for (std::size_t i = 0; i < alive.size() && !removed; ++i) {
      const Element x = alive[i];
      // Down beat point: the elements below x have a maximum. Up: those above have a minimum.
      for (int direction = 0; direction < 2 && !removed; ++direction) {
        std::vector<Element> side;
        for (Element y : alive)
          if (direction == 0 ? poset.less(y, x) : poset.less(x, y)) side.push_back(y);
        for (Element m : side) {
          const bool extreme = std::all_of(side.begin(), side.end(), [&](Element y) {
            return direction == 0 ? poset.leq(y, m) : poset.leq(m, y);
          });
          if (extreme) {
            alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i));
            removed = true;
            break;
          }
        }
      }
    }
  }
  return alive.size() == 1;
}

}  // namespace oracles
