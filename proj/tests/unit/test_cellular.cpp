#include "mbposet/cellular.hpp"
#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"
#include "mbposet/random.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace mbposet;

namespace {

Poset diamond_pair() { return Poset::build({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}); }

void check_diamonds(const CellularComplex& c) {
  const Poset& x = c.poset();
  for (Element top = 0; top < x.size(); ++top)
    for (Element bottom = 0; bottom < x.size(); ++bottom) {
      if (!x.less(bottom, top) || c.graded().degree(top) != c.graded().degree(bottom) + 2) continue;
      std::vector<Element> middle;
      for (Element z : x.lower_covers(top))
        if (x.covers(bottom, z)) middle.push_back(z);
      REQUIRE(middle.size() == 2);
      CHECK(c.incidence(top, middle[0]) * c.incidence(middle[0], bottom) +
                c.incidence(top, middle[1]) * c.incidence(middle[1], bottom) ==
            0);
    }
}

bool unit_incidences(const CellularComplex& c) {
  for (const auto& [x, w, eps] : c.incidence_table())
    if (eps != 1 && eps != -1) return false;
  return true;
}

}  // namespace

TEST_CASE("cellularity verdicts") {
  const CellularityReport t3 = check_cellularity(fixtures::t3());
  CHECK(t3.is_graded);
  CHECK(t3.is_cellular);
  CHECK(t3.is_homologically_admissible);

  const CellularityReport rp2 = check_cellularity(fixtures::face(fixtures::rp2_6()));
  CHECK(rp2.is_cellular);
  CHECK(rp2.is_homologically_admissible);

  const CellularityReport pair = check_cellularity(diamond_pair());
  CHECK(pair.is_cellular);
  CHECK(pair.is_homologically_admissible);

  // Three points under one top: Û is three points, not a 0-sphere.
  const CellularityReport fan = check_cellularity(Poset::build({"a", "b", "c", "t"}, {{"a", "t"}, {"b", "t"}, {"c", "t"}}));
  CHECK(fan.is_graded);
  CHECK_FALSE(fan.is_cellular);
  REQUIRE(fan.non_spheres.size() == 1);
  CHECK(fan.non_spheres[0].reduced.betti_at(0) == 2);
  CHECK_THROWS_AS(cellular_chain_complex(Poset::build({"a", "b", "c", "t"}, {{"a", "t"}, {"b", "t"}, {"c", "t"}})),
                  Error);

  // A single edge over one vertex: Û_t = {a} is acyclic, so not a 0-sphere.
  CHECK_FALSE(check_cellularity(Poset::build({"a", "t"}, {{"a", "t"}})).is_cellular);

  const CellularityReport skew = check_cellularity(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  CHECK(skew.is_graded);
  const Poset not_graded = Poset::build({"a", "b", "c", "e", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "e"}, {"c", "d"}, {"e", "d"}});
  const CellularityReport ng = check_cellularity(not_graded);
  CHECK_FALSE(ng.is_graded);
  CHECK_FALSE(ng.is_cellular);
  CHECK_FALSE(ng.is_homologically_admissible);
}

TEST_CASE("sphere generators") {
  const GradedPoset t3 = GradedPoset::require(fixtures::t3());
  const Poset& x = t3.poset();
  const SphereGenerator v = sphere_generator(t3, x.at("v1"));
  CHECK(v.degree == 0);
  REQUIRE(v.cycle.size() == 1);
  CHECK(v.cycle[0].first.empty());
  CHECK(v.cycle[0].second == 1);

  const SphereGenerator e = sphere_generator(t3, x.at("e12"));
  REQUIRE(e.cycle.size() == 2);
  CHECK(e.cycle[0].first == Chain{x.at("v1")});
  CHECK(e.cycle[0].second == 1);
  CHECK(e.cycle[1].second == -1);

  const GradedPoset rp2 = face_poset(fixtures::rp2_6());
  const SphereGenerator tri = sphere_generator(rp2, rp2.poset().at("1|2|4"));
  CHECK(tri.degree == 2);
  CHECK(tri.cycle.size() == 6);
  for (const auto& [chain, coeff] : tri.cycle) {
    CHECK(chain.size() == 2);
    CHECK((coeff == 1 || coeff == -1));
  }
}

TEST_CASE("incidences on the triangle boundary") {
  const Poset x = fixtures::t3();
  const CellularComplex c = cellular_chain_complex(x);
  CHECK(c.incidence(x.at("e12"), x.at("v1")) == -1);
  CHECK(c.incidence(x.at("e12"), x.at("v2")) == 1);
  CHECK(c.incidence(x.at("e12"), x.at("v3")) == 0);
  CHECK(c.incidence_table().size() == 6);
  CHECK(homology(c.chains()) == poset_homology(x));
  // Same shape, different element names.
  CHECK_FALSE(gauge_equivalent(c, face_poset_cellular_complex(fixtures::triangle_boundary())));
}

TEST_CASE("cellular homology of the standard fixtures") {
  for (const SimplicialComplex& k : {fixtures::triangle_boundary(), fixtures::tetrahedron_boundary(), fixtures::rp2_6(),
                                     fixtures::full_triangle(), fixtures::two_triangles(), fixtures::two_circles()}) {
    const Poset x = fixtures::face(k);
    const CellularComplex general = cellular_chain_complex(x);
    const CellularComplex fast = face_poset_cellular_complex(k);
    CHECK(general.chains().squares_to_zero());
    CHECK(unit_incidences(general));
    CHECK(gauge_equivalent(general, fast));
    CHECK(homology(general.chains()) == homology(simplicial_chain_complex(k)));
    CHECK(homology(fast.chains()) == homology(general.chains()));
    CHECK(verify_cellular_isomorphism(x));
    check_diamonds(general);
    check_diamonds(fast);
  }
  const HomologySummary rp2 = homology(cellular_chain_complex(fixtures::face(fixtures::rp2_6())).chains());
  CHECK(rp2.torsion_at(1) == std::vector<Integer>{2});
}

TEST_CASE("non-face cellular poset") {
  const CellularComplex c = cellular_chain_complex(diamond_pair());
  CHECK(unit_incidences(c));
  CHECK(homology(c.chains()) == poset_homology(diamond_pair()));
  CHECK(AdmissiblePoset::verify(diamond_pair()).cellular().chains().squares_to_zero());
}

TEST_CASE("gauge flips change signs and nothing else") {
  Xorshift64Star rng(17);
  const CellularComplex base = cellular_chain_complex(fixtures::face(fixtures::rp2_6()));
  const HomologySummary h = homology(base.chains());
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<bool> flip(base.poset().size());
    for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng.chance(1, 2);
    const CellularComplex flipped = base.with_gauge_flips(flip);
    CHECK(flipped.chains().squares_to_zero());
    CHECK(homology(flipped.chains()) == h);
    CHECK(gauge_equivalent(base, flipped));
    for (const auto& [x, w, eps] : base.incidence_table())
      CHECK(flipped.incidence(x, w) == (flip[x] != flip[w] ? -eps : eps));
  }
}

TEST_CASE("gauge equivalence rejects a single sign change") {
  const CellularComplex base = face_poset_cellular_complex(fixtures::triangle_boundary());
  CellularComplex::Incidence table;
  for (const auto& [x, w, eps] : base.incidence_table()) table[{x, w}] = eps;
  // One flipped incidence on a circle is not a gauge change.
  table.begin()->second = -table.begin()->second;
  const CellularComplex odd(base.graded(), table);
  CHECK_FALSE(gauge_equivalent(base, odd));
  CHECK(homology(odd.chains()).betti_at(1) == 0);
}

TEST_CASE("both pipelines agree on random face posets") {
  Xorshift64Star rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const SimplicialComplex k = random_complex(rng, 3 + rng.uniform(5), 2, 1 + rng.uniform(6));
    const Poset x = fixtures::face(k);
    const AdmissiblePoset a = AdmissiblePoset::verify(x);
    CHECK(a.report().is_cellular);
    CHECK(unit_incidences(a.cellular()));
    CHECK(verify_cellular_isomorphism(x));
    CHECK(gauge_equivalent(a.cellular(), face_poset_cellular_complex(k)));
  }
}

TEST_CASE("admissibility implies cellularity on random graded posets") {
  Xorshift64Star rng(31);
  std::size_t admissible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Poset x = random_graded_poset(rng, 10, 3);
    const CellularityReport r = check_cellularity(x);
    if (r.is_homologically_admissible) {
      ++admissible;
      CHECK(r.is_cellular);
      const CellularComplex c = cellular_chain_complex(x, r);
      CHECK(unit_incidences(c));
      CHECK(homology(c.chains()) == poset_homology(x));
    } else if (r.is_cellular) {
      CHECK(verify_cellular_isomorphism(x));
    }
  }
  CHECK(admissible > 0);
}

TEST_CASE("admissible poset errors") {
  CHECK_THROWS_AS(AdmissiblePoset::verify(Poset::empty_poset()), Error);
  try {
    AdmissiblePoset::verify(Poset::build({"a", "t"}, {{"a", "t"}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdmissible);
  }
}
