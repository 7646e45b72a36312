#pragma once

#include "mbposet/cellular.hpp"
#include "mbposet/chain_complex.hpp"
#include "mbposet/matching.hpp"
#include "mbposet/morse_bott.hpp"

#include <string>
#include <vector>

namespace mbposet {

/// Σ_k b_k + 2 Σ_k μ_k of the integer homology.
std::size_t hccat(const HomologySummary& h);
std::size_t hccat(const ChainComplex& complex);
/// Via the order complex; throws EmptyPoset.
std::size_t hccat(const Poset& poset);

/// Subcomplex L ⊆ C spanned, in each degree k, by b_k free cycle
/// representatives, μ_k torsion cycles and μ_{k−1} chains bounding multiples
/// of the degree k−1 torsion cycles.
struct PitcherSubcomplex {
  ChainComplex complex;
  ChainMap inclusion;
  std::vector<std::size_t> rank_profile;  // from the ambient lowest degree
  bool chain_map = false;
  bool injective = false;
  bool quasi_isomorphism = false;
};

PitcherSubcomplex pitcher_subcomplex(const ChainComplex& complex);

/// V(x) = −ε(y,x) y for (x,y) ∈ M*, φ = Id + dV + Vd, and the complex of
/// φ-invariant chains. Matrices are indexed by degree from 0.
struct FlowData {
  std::vector<IntegerMatrix> V;  // V[p] : C_p → C_{p+1}
  std::vector<IntegerMatrix> phi;
  std::vector<std::size_t> invariant_ranks;
  std::vector<std::size_t> critical;  // M*-critical elements per degree
  ChainComplex invariant_complex;
  ChainMap inclusion;
  bool closed = false;
  bool ranks_match = false;
  bool quasi_isomorphism = false;

  bool holds() const { return closed && ranks_match && quasi_isomorphism; }
};

/// Throws NotMorseMatching.
FlowData flow_operator(const AdmissiblePoset& poset, const Matching& morse_matching);

struct LsReport {
  std::size_t hccat = 0;
  /// 1 per critical element plus 2 per orbit class.
  std::size_t basic_set_bound = 0;
  /// m_p* = c_p + A_p + A_{p−1}.
  std::vector<std::size_t> m_star;
  std::size_t m_star_total = 0;
  /// Invariant ranks of the flow of the perturbed matching.
  std::vector<std::size_t> flow_ranks;
  bool flow_ranks_match = false;
  bool flow_verified = false;
  bool basic_set_bound_holds = false;
  bool m_star_bound_holds = false;
  std::vector<std::string> warnings;

  bool holds() const { return basic_set_bound_holds && m_star_bound_holds && flow_ranks_match && flow_verified; }
};

/// Throws NotMorseSmale. Each orbit class is also measured as a subspace; a
/// value other than 2 is reported as a warning.
LsReport ls_bound_check(const AdmissiblePoset& poset, const Matching& matching);

struct CriticalPointBound {
  std::size_t hccat = 0;
  std::size_t critical = 0;
  bool holds = false;
};

/// hccat(X) ≤ #crit(f). Throws NotMorse.
CriticalPointBound critical_point_bound(const AdmissiblePoset& poset, const std::vector<Rational>& values);

/// hccat of the simplicial chains of K equals hccat of the cellular complex of Δ(K).
bool hccat_face_poset_consistency(const SimplicialComplex& complex);

}  // namespace mbposet
