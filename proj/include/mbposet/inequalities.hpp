#pragma once

#include "mbposet/cellular.hpp"
#include "mbposet/matching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mbposet {

/// m_k = Σ_Λ rank H_k(Λ̄, Λ̇) over the basic sets Λ, with Λ̄ = ∪_{x∈Λ} U_x
/// and Λ̇ = Λ̄ − Λ.
struct MorseBottNumbers {
  std::vector<std::size_t> m;
  /// Per basic set, in BasicSetDecomposition order.
  std::vector<HomologySummary> relative;
  /// Torsion of the relative groups, ignored by m but reported.
  std::vector<std::vector<Integer>> torsion;
};

MorseBottNumbers morse_bott_numbers(const AdmissiblePoset& poset, const Matching& matching);

/// Orbit classes of index p have relative homology only in degrees p, p+1;
/// a critical element of degree p has exactly Z in degree p.
bool relative_homology_window(const AdmissiblePoset& poset, const Matching& matching);

struct InequalityRow {
  int k = 0;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

struct InequalityVerdict {
  std::string name;
  std::vector<InequalityRow> rows;
  bool holds() const;
};

struct InequalityReport {
  std::vector<std::size_t> m, b, mu, c, A, A1;
  std::vector<InequalityVerdict> verdicts;
  bool holds() const;
  const InequalityVerdict* find(const std::string& name) const;
};

/// "strong": Σ_i (−1)^i m_{k−i} ≥ Σ_i (−1)^i b_{k−i}; "weak": m_k ≥ b_k;
/// "euler": Σ (−1)^k m_k = Σ (−1)^k b_k (one row, k = dimension).
InequalityReport strong_morse_bott(const AdmissiblePoset& poset, const Matching& matching,
                                   Coefficients coefficients = Coefficients::Integers);

/// "torsion-orbit": A_k + Σ_i (−1)^i c_{k−i} ≥ μ_k + Σ_i (−1)^i b_{k−i}.
/// Throws NotMorseSmale.
InequalityReport orbit_inequalities_torsion(const AdmissiblePoset& poset, const Matching& matching);

/// "multiplicity-orbit": A'_k + Σ_i (−1)^i c_{k−i} ≥ Σ_i (−1)^i b_{k−i}(Q),
/// where A'_k counts index-k orbits of multiplicity +1. Throws NotMorseSmale.
InequalityReport orbit_inequalities_multiplicity(const AdmissiblePoset& poset, const Matching& matching);

/// Every applicable verdict: the orbit families only for Morse-Smale matchings.
InequalityReport inequality_report(const AdmissiblePoset& poset, const Matching& matching);

struct EulerCharacteristics {
  std::optional<long long> graded;  // Σ (−1)^p #X^(=p), graded posets only
  long long order_complex = 0;      // χ(K(X))
};

EulerCharacteristics euler_characteristics(const Poset& poset);
/// Throws NotGraded.
long long graded_euler_characteristic(const Poset& poset);

}  // namespace mbposet
