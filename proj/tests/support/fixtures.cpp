#include "fixtures.hpp"

namespace fixtures {

using namespace mbposet;

Poset t3() {
  return Poset::build({"v1", "v2", "v3", "e12", "e13", "e23"},
                      {{"v1", "e12"}, {"v2", "e12"}, {"v1", "e13"}, {"v3", "e13"}, {"v2", "e23"}, {"v3", "e23"}});
}

Matching m1(const Poset& t3) { return Matching::validate_named(t3, {{"v1", "e12"}, {"v2", "e23"}}); }

Matching m2(const Poset& t3) { return Matching::validate_named(t3, {{"v1", "e12"}, {"v2", "e23"}, {"v3", "e13"}}); }

SimplicialComplex triangle_boundary() { return parse_simplicial_complex("1 2\n2 3\n1 3\n"); }

SimplicialComplex tetrahedron_boundary() { return parse_simplicial_complex("1 2 3\n1 2 4\n1 3 4\n2 3 4\n"); }

SimplicialComplex full_triangle() { return parse_simplicial_complex("1 2 3\n"); }

SimplicialComplex two_triangles() { return parse_simplicial_complex("1 2 3\n2 3 4\n"); }

SimplicialComplex rp2_6() {
  return parse_simplicial_complex(
      "1 2 4\n1 2 6\n1 3 5\n1 3 6\n1 4 5\n"
      "2 3 4\n2 3 5\n2 5 6\n3 4 6\n4 5 6\n");
}

SimplicialComplex simplex4_skeleton2() {
  std::vector<std::vector<std::string>> facets;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c) facets.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
  return SimplicialComplex::from_named_facets(facets);
}

SimplicialComplex two_circles() { return parse_simplicial_complex("1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"); }

Poset face(const SimplicialComplex& k) { return face_poset(k).poset(); }

std::vector<Rational> degree_function(const Poset& poset) {
  std::vector<Rational> values;
  for (Element e = 0; e < poset.size(); ++e) values.emplace_back(static_cast<long long>(poset.height(e)));
  return values;
}

}  // namespace fixtures
