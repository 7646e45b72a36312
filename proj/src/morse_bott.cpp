#include "mbposet/morse_bott.hpp"

#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace mbposet {

MorseVerdict is_morse_function(const Poset& poset, const std::vector<Rational>& values) {
  MorseVerdict verdict;
  verdict.morse = true;
  for (Element x = 0; x < poset.size(); ++x) {
    std::size_t up = 0, down = 0;
    for (Element y : poset.upper_covers(x))
      if (values.at(x) >= values.at(y)) ++up;
    for (Element w : poset.lower_covers(x))
      if (values.at(w) >= values.at(x)) ++down;
    if (up > 1 || down > 1) verdict.morse = false;
    if (up == 0 && down == 0) verdict.critical.push_back(x);
  }
  return verdict;
}

Matching morse_function_to_matching(const Poset& poset, const std::vector<Rational>& values) {
  if (!is_morse_function(poset, values).morse) throw Error(ErrorCode::NotMorse, "function is not a Morse function");
  std::vector<Matching::Pair> pairs;
  for (const auto& [w, x] : poset.cover_list())
    if (values.at(w) >= values.at(x)) pairs.push_back({w, x});
  try {
    return Matching::validate(poset, pairs);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotMorse, std::string("exceptional pairs do not form a matching: ") + e.what());
  }
}

MorseBottFunction integrate_matching(const Poset& poset, const Matching& matching) {
  if (!GradedPoset::from(poset)) throw Error(ErrorCode::NotGraded, "integration needs a graded poset");
  const MatchedDigraph graph = matched_digraph(poset, matching);
  const auto components = strongly_connected_components(graph);
  std::vector<std::size_t> component_of(poset.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (Element e : components[c]) component_of[e] = c;

  const std::size_t n = components.size();
  std::vector<std::vector<std::size_t>> arcs(n);
  std::vector<std::size_t> in_degree(n, 0);
  for (Element u = 0; u < poset.size(); ++u)
    for (Element v : graph.successors[u])
      if (component_of[u] != component_of[v]) {
        arcs[component_of[u]].push_back(component_of[v]);
        ++in_degree[component_of[v]];
      }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t c = 0; c < n; ++c)
    if (in_degree[c] == 0) ready.push(c);
  std::vector<std::size_t> rank(n, 0);
  std::size_t next = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.top();
    ready.pop();
    rank[c] = next++;
    for (std::size_t d : arcs[c])
      if (--in_degree[d] == 0) ready.push(d);
  }

  MorseBottFunction f;
  f.matching = matching;
  for (Element e = 0; e < poset.size(); ++e) f.values.emplace_back(static_cast<long long>(n - rank[component_of[e]]));
  return f;
}

Matching governing_matching(const Poset& poset, const MorseBottFunction& f) {
  if (f.matching) return *f.matching;
  return morse_function_to_matching(poset, f.values);
}

std::vector<Rational> critical_values(const Poset& poset, const MorseBottFunction& f) {
  std::vector<Rational> out;
  for (const auto& set : basic_sets(poset, governing_matching(poset, f)).sets) out.push_back(f(set.elements.front()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> sublevel_elements(const Poset& poset, const MorseBottFunction& f, const Rational& a) {
  std::vector<Element> seeds;
  for (Element x = 0; x < poset.size(); ++x)
    if (f(x) <= a) seeds.push_back(x);
  return poset.down_closure(seeds);
}

Poset sublevel(const Poset& poset, const MorseBottFunction& f, const Rational& a) {
  return poset.induced(sublevel_elements(poset, f, a));
}

std::vector<Element> class_of(const Poset& poset, const Matching& matching, Element x) {
  const auto decomposition = basic_sets(poset, matching);
  if (auto c = decomposition.class_of.at(x)) return decomposition.sets[*c].elements;
  return {x};
}

std::vector<Element> boundary_of_class(const Poset& poset, const std::vector<Element>& cls) {
  std::vector<bool> inside(poset.size(), false);
  for (Element e : cls) inside.at(e) = true;
  std::vector<bool> hit(poset.size(), false);
  for (Element x : cls)
    for (Element w : poset.lower_covers(x))
      if (!inside[w]) hit[w] = true;
  std::vector<Element> out;
  for (Element e = 0; e < poset.size(); ++e)
    if (hit[e]) out.push_back(e);
  return out;
}

namespace {

std::vector<Rational> values_in(const std::vector<Rational>& values, const Rational& a, const Rational& b) {
  std::vector<Rational> out;
  for (const auto& v : values)
    if (a <= v && v <= b) out.push_back(v);
  return out;
}

void require_interval(const Rational& a, const Rational& b) {
  if (a > b) throw std::invalid_argument("interval endpoints out of order");
}

}  // namespace

bool verify_collapse(const Poset& poset, const MorseBottFunction& f, const Rational& a, const Rational& b) {
  require_interval(a, b);
  auto inside = values_in(critical_values(poset, f), a, b);
  if (!inside.empty())
    throw Error(ErrorCode::CriticalValueInInterval, "critical value " + inside.front().str() + " lies in the interval");
  const std::vector<Element> upper = sublevel_elements(poset, f, b);
  if (upper.empty()) return true;
  const std::vector<Element> lower = sublevel_elements(poset, f, a);
  std::vector<Element> local;
  for (Element e : lower)
    local.push_back(static_cast<Element>(std::lower_bound(upper.begin(), upper.end(), e) - upper.begin()));
  return relative_poset_homology(poset.induced(upper), local).is_trivial();
}

AttachmentReport verify_attachment(const Poset& poset, const MorseBottFunction& f, const Rational& a, const Rational& b) {
  require_interval(a, b);
  const Matching matching = governing_matching(poset, f);
  auto inside = values_in(critical_values(poset, f), a, b);
  if (inside.size() != 1)
    throw Error(ErrorCode::WrongCriticalCount,
                "interval holds " + std::to_string(inside.size()) + " critical values, expected exactly one");
  AttachmentReport report;
  report.a = a;
  report.b = b;
  report.critical_value = inside.front();
  for (const auto& set : basic_sets(poset, matching).sets)
    if (f(set.elements.front()) == report.critical_value)
      report.cls.insert(report.cls.end(), set.elements.begin(), set.elements.end());
  std::sort(report.cls.begin(), report.cls.end());
  report.boundary = boundary_of_class(poset, report.cls);

  const std::vector<Element> lower = sublevel_elements(poset, f, a);
  const std::vector<Element> upper = sublevel_elements(poset, f, b);
  std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(), std::back_inserter(report.added));
  report.added_is_class = report.added == report.cls;
  report.boundary_in_sublevel = std::includes(lower.begin(), lower.end(), report.boundary.begin(), report.boundary.end());
  std::vector<Element> common;
  std::set_intersection(lower.begin(), lower.end(), report.cls.begin(), report.cls.end(), std::back_inserter(common));
  report.class_disjoint_from_sublevel = common.empty();
  return report;
}

std::vector<IntervalCheck> filtration_sweep(const Poset& poset, const MorseBottFunction& f) {
  std::vector<Rational> values(f.values);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::vector<Rational> critical = critical_values(poset, f);

  std::vector<IntervalCheck> out;
  Rational regular_start = values.empty() ? Rational(0) : values.front() - 1;
  for (const auto& c : critical) {
    const auto it = std::lower_bound(values.begin(), values.end(), c);
    const Rational a = it == values.begin() ? c - 1 : (*(it - 1) + c) / 2;
    const Rational b = it + 1 == values.end() ? c + 1 : (c + *(it + 1)) / 2;

    IntervalCheck regular;
    regular.a = regular_start;
    regular.b = a;
    regular.passed = verify_collapse(poset, f, regular.a, regular.b);
    out.push_back(std::move(regular));

    IntervalCheck attach;
    attach.a = a;
    attach.b = b;
    attach.critical = true;
    attach.attachment = verify_attachment(poset, f, a, b);
    attach.passed = attach.attachment->holds();
    out.push_back(std::move(attach));
    regular_start = b;
  }
  IntervalCheck last;
  last.a = regular_start;
  last.b = values.empty() ? regular_start : std::max(regular_start, Rational(values.back() + 1));
  last.passed = verify_collapse(poset, f, last.a, last.b);
  out.push_back(std::move(last));
  return out;
}

}  // namespace mbposet
