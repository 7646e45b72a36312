#include "mbposet/error.hpp"
#include "mbposet/matching.hpp"
#include "mbposet/random.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "searches.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace mbposet;

namespace {

ErrorCode matching_error(const Poset& x, const std::vector<std::pair<std::string, std::string>>& pairs) {
  try {
    Matching::validate_named(x, pairs);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted");
  return ErrorCode::ParseError;
}

bool reaches(const MatchedDigraph& g, Element from, Element to) {
  std::vector<bool> seen(g.successors.size());
  std::vector<Element> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const Element u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (Element v : g.successors[u])
      if (!seen[v]) seen[v] = true, stack.push_back(v);
  }
  return false;
}

bool acyclic(const std::vector<std::vector<Element>>& arcs) { return oracles::simple_cycles(arcs, 1).empty(); }

void check_orbit_shape(const Poset& x, const Matching& m, const ClosedOrbit& o) {
  const std::size_t r = o.lower.size();
  REQUIRE(o.upper.size() == r);
  for (std::size_t i = 0; i < r; ++i) {
    CHECK(m.contains(o.lower[i], o.upper[i]));
    CHECK(x.covers(o.lower[(i + 1) % r], o.upper[i]));
    CHECK(o.lower[(i + 1) % r] != o.lower[i]);
    CHECK(x.height(o.lower[i]) == o.index);
  }
}

}  // namespace

TEST_CASE("validation") {
  const Poset x = fixtures::t3();
  CHECK(fixtures::m1(x).size() == 2);
  CHECK(Matching::validate(x, {}).empty());
  CHECK(matching_error(x, {{"v1", "e12"}, {"v1", "e13"}}) == ErrorCode::ElementMatchedTwice);
  CHECK(matching_error(x, {{"v1", "e23"}}) == ErrorCode::NotACover);
  CHECK(matching_error(x, {{"e12", "v1"}}) == ErrorCode::NotACover);
  CHECK(matching_error(x, {{"v1", "zz"}}) == ErrorCode::UnknownElement);

  const Matching m = fixtures::m1(x);
  CHECK(m.target(x.at("v1")) == x.at("e12"));
  CHECK(m.source(x.at("e23")) == x.at("v2"));
  CHECK_FALSE(m.target(x.at("e12")).has_value());
  CHECK_FALSE(m.is_matched(x.at("v3")));
  CHECK(m.without({{x.at("v1"), x.at("e12")}}).size() == 1);
}

TEST_CASE("matched digraph of the triangle boundary") {
  const Poset x = fixtures::t3();
  const MatchedDigraph g = matched_digraph(x, fixtures::m2(x));
  CHECK(g.arc_count() == 6);
  const std::vector<std::string> cycle{"v1", "e12", "v2", "e23", "v3", "e13"};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& succ = g.successors[x.at(cycle[i])];
    REQUIRE(succ.size() == 1);
    CHECK(succ[0] == x.at(cycle[(i + 1) % cycle.size()]));
  }
  const MatchedDigraph down = matched_digraph(x, Matching::validate(x, {}));
  for (Element e = 0; e < x.size(); ++e)
    for (Element f : down.successors[e]) CHECK(x.covers(f, e));
  CHECK(is_morse_matching(x, fixtures::m1(x)));
  CHECK_FALSE(is_morse_matching(x, fixtures::m2(x)));
  CHECK(is_morse_matching(x, Matching::validate(x, {})));
}

TEST_CASE("basic sets of the triangle boundary") {
  const Poset x = fixtures::t3();
  const BasicSetDecomposition orbit = basic_sets(x, fixtures::m2(x));
  REQUIRE(orbit.sets.size() == 1);
  CHECK(orbit.sets[0].elements.size() == 6);
  CHECK(orbit.sets[0].index == 0);
  CHECK(orbit.critical().empty());

  const BasicSetDecomposition morse = basic_sets(x, fixtures::m1(x));
  CHECK(morse.orbit_classes().empty());
  CHECK(morse.critical() == std::vector<Element>{x.at("v3"), x.at("e13")});
  CHECK_FALSE(morse.class_of[x.at("v1")].has_value());

  const BasicSetDecomposition none = basic_sets(x, Matching::validate(x, {}));
  CHECK(none.critical().size() == 6);
  CHECK(none.recurrent_set().size() == 6);
}

TEST_CASE("morse-smale verdicts and multiplicity on the triangle boundary") {
  const AdmissiblePoset a = AdmissiblePoset::verify(fixtures::t3());
  const Poset& x = a.poset();
  const MorseSmaleVerdict v = is_morse_smale(a, fixtures::m2(x));
  CHECK(v.morse_smale);
  REQUIRE(v.orbits.size() == 1);
  CHECK(v.orbits[0].index == 0);
  CHECK(v.orbits[0].lower.front() == x.at("v1"));
  check_orbit_shape(x, fixtures::m2(x), v.orbits[0]);
  CHECK(orbit_multiplicity(a.cellular(), v.orbits[0]) == 1);
  for (std::size_t k = 0; k < 3; ++k) CHECK(orbit_multiplicity(a.cellular(), v.orbits[0].rotated(k)) == 1);

  const MorseSmaleVerdict vm = is_morse_smale(a, fixtures::m1(x));
  CHECK(vm.morse_smale);
  CHECK(vm.orbits.empty());

  const Perturbation p = perturb_to_morse(x, fixtures::m2(x));
  REQUIRE(p.removed.size() == 1);
  CHECK(p.removed[0] == Matching::Pair{x.at("v1"), x.at("e12")});
  CHECK(basic_sets(x, p.matching).critical() == std::vector<Element>{x.at("v1"), x.at("e12")});
  CHECK(perturb_to_morse(x, fixtures::m1(x)).matching.pairs() == fixtures::m1(x).pairs());
}

TEST_CASE("two disjoint orbits") {
  const AdmissiblePoset a = AdmissiblePoset::verify(fixtures::face(fixtures::two_circles()));
  const Poset& x = a.poset();
  const Matching m = Matching::validate_named(
      x, {{"1", "1|2"}, {"2", "2|3"}, {"3", "1|3"}, {"4", "4|5"}, {"5", "5|6"}, {"6", "4|6"}});
  const MorseSmaleVerdict v = is_morse_smale(a, m);
  CHECK(v.morse_smale);
  CHECK(v.orbits.size() == 2);
  CHECK(orbit_counts(a.graded(), v.orbits) == std::vector<std::size_t>{2, 0});
  const Perturbation p = perturb_to_morse(x, m);
  CHECK(p.removed.size() == 2);
  CHECK(is_morse_matching(x, p.matching));
  CHECK(acyclic(oracles::matched_arcs(x, p.matching)));
  CHECK(critical_counts(a.graded(), p.matching) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("orbit class that is not a single cycle") {
  Xorshift64Star rng(41);
  const Poset x = fixtures::face(fixtures::simplex4_skeleton2());
  const auto m = searches::non_simple_orbit_class(rng, x, 20000);
  REQUIRE(m.has_value());
  const MorseSmaleVerdict v = morse_smale_orbits(x, *m);
  CHECK_FALSE(v.morse_smale);
  CHECK_FALSE(v.offending_classes.empty());
  CHECK_THROWS_AS(perturb_to_morse(x, *m), Error);
  // Some element of an offending class has two successors inside it.
  const BasicSetDecomposition d = basic_sets(x, *m);
  const MatchedDigraph g = matched_digraph(x, *m);
  bool branching = false;
  for (std::size_t cls : v.offending_classes)
    for (Element e : d.sets[cls].elements) {
      std::size_t inside = 0;
      for (Element f : g.successors[e]) inside += d.class_of[f] == cls;
      branching |= inside >= 2;
    }
  CHECK(branching);
}

TEST_CASE("recurrent set and orbit classes agree with brute-force cycles") {
  Xorshift64Star rng(43);
  std::size_t with_orbits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Poset x = random_graded_poset(rng, 10, 3);
    const Matching m = random_matching(rng, x, 80);
    const BasicSetDecomposition d = basic_sets(x, m);
    const auto arcs = oracles::matched_arcs(x, m);
    const MatchedDigraph g = matched_digraph(x, m);
    for (Element e = 0; e < x.size(); ++e) {
      auto s = g.successors[e], t = arcs[e];
      std::sort(s.begin(), s.end());
      std::sort(t.begin(), t.end());
      CHECK(s == t);
    }

    const std::vector<long> brute = oracles::brute_basic_sets(x, m);
    for (Element a = 0; a < x.size(); ++a) {
      CHECK(d.class_of[a].has_value() == (brute[a] >= 0));
      for (Element b = a + 1; b < x.size(); ++b) {
        const bool same = d.class_of[a] && d.class_of[a] == d.class_of[b];
        CHECK(same == (brute[a] >= 0 && brute[a] == brute[b]));
        if (same) CHECK((reaches(g, a, b) && reaches(g, b, a)));
      }
    }
    CHECK(is_morse_matching(x, m) == d.orbit_classes().empty());
    CHECK(is_morse_matching(x, m) == acyclic(arcs));
    for (Element e : d.critical()) CHECK_FALSE(m.is_matched(e));

    const auto cycles = oracles::simple_cycles(arcs);
    with_orbits += !cycles.empty();
    for (const auto& cycle : cycles) {
      std::set<Element> on(cycle.begin(), cycle.end());
      std::size_t p = x.height(cycle[0]);
      for (Element e : cycle) p = std::min(p, x.height(e));
      for (Element e : cycle) CHECK((x.height(e) == p || x.height(e) == p + 1));
      for (Element u = 0; u < x.size(); ++u) {
        if (on.count(u) || !m.is_matched(u)) continue;
        const std::size_t h = x.height(u);
        if (h + 1 >= p && h <= p + 2) CHECK_FALSE(on.count(*m.partner(u)));
      }
    }

    const MorseSmaleVerdict v = morse_smale_orbits(x, m);
    if (v.morse_smale) {
      for (const ClosedOrbit& o : v.orbits) check_orbit_shape(x, m, o);
      const Perturbation p = perturb_to_morse(x, m);
      CHECK(p.removed.size() == v.orbits.size());
      CHECK(acyclic(oracles::matched_arcs(x, p.matching)));
      const GradedPoset gp = GradedPoset::require(x);
      const auto c = critical_counts(gp, m);
      const auto a = orbit_counts(gp, v.orbits);
      const auto star = critical_counts(gp, p.matching);
      for (std::size_t k = 0; k < star.size(); ++k)
        CHECK(star[k] == c[k] + a[k] + (k > 0 ? a[k - 1] : 0));
    }
  }
  CHECK(with_orbits > 10);
}

TEST_CASE("multiplicity is invariant under gauge flips and rotation") {
  Xorshift64Star rng(47);
  std::size_t orbits_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const searches::MorseSmaleFixture f = searches::random_morse_smale_fixture(rng);
    const AdmissiblePoset a = AdmissiblePoset::verify(f.poset);
    const MorseSmaleVerdict v = is_morse_smale(a, f.matching);
    REQUIRE(v.morse_smale);
    std::vector<bool> flip(f.poset.size());
    for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng.chance(1, 2);
    const CellularComplex flipped = a.cellular().with_gauge_flips(flip);
    const CellularComplex fast = face_poset_cellular_complex(f.complex);
    for (const ClosedOrbit& o : v.orbits) {
      ++orbits_seen;
      const Integer mu = orbit_multiplicity(a.cellular(), o);
      CHECK((mu == 1 || mu == -1));
      CHECK(orbit_multiplicity(flipped, o) == mu);
      CHECK(orbit_multiplicity(fast, o) == mu);
      for (std::size_t k = 0; k < o.lower.size(); ++k) CHECK(orbit_multiplicity(a.cellular(), o.rotated(k)) == mu);
    }
  }
  CHECK(orbits_seen >= 40);
}
