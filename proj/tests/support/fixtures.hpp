#pragma once

#include "mbposet/cellular.hpp"
#include "mbposet/matching.hpp"
#include "mbposet/morse_bott.hpp"
#include "mbposet/poset.hpp"
#include "mbposet/simplicial.hpp"

namespace fixtures {

/// Face poset of the triangle boundary with elements v1 v2 v3 e12 e13 e23.
mbposet::Poset t3();
/// {(v1,e12), (v2,e23)}: a Morse matching with critical v3 and e13.
mbposet::Matching m1(const mbposet::Poset& t3);
/// {(v1,e12), (v2,e23), (v3,e13)}: one closed orbit through all of T3.
mbposet::Matching m2(const mbposet::Poset& t3);

mbposet::SimplicialComplex triangle_boundary();
mbposet::SimplicialComplex tetrahedron_boundary();
mbposet::SimplicialComplex full_triangle();
mbposet::SimplicialComplex two_triangles();
/// The 6-vertex triangulation of the real projective plane.
mbposet::SimplicialComplex rp2_6();
/// Every triangle on five vertices; each edge lies in three triangles.
mbposet::SimplicialComplex simplex4_skeleton2();
/// Two disjoint copies of the triangle boundary.
mbposet::SimplicialComplex two_circles();

mbposet::Poset face(const mbposet::SimplicialComplex& k);

/// Degree of each element as a function value.
std::vector<mbposet::Rational> degree_function(const mbposet::Poset& poset);

}  // namespace fixtures
