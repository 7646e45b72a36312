#pragma once

#include "mbposet/integer_matrix.hpp"

#include <string>
#include <vector>

namespace mbposet {

enum class Coefficients { Integers, Rationals };

/// Finitely generated free chain complex over Z. Degrees run from
/// lowest_degree() to top_degree(); a lowest degree of -1 is the augmentation
/// slot of a reduced complex.
class ChainComplex {
 public:
  ChainComplex() = default;

  /// labels[i] names the basis of C_{lowest + i}; boundaries[i] is
  /// d_{lowest + i + 1} : C_{lowest + i + 1} -> C_{lowest + i}.
  ChainComplex(int lowest_degree, std::vector<std::vector<std::string>> labels,
               std::vector<IntegerMatrix> boundaries);

  int lowest_degree() const noexcept { return lowest_; }
  int top_degree() const noexcept { return lowest_ + static_cast<int>(labels_.size()) - 1; }

  std::size_t rank(int p) const;
  std::size_t total_rank() const;
  const std::vector<std::string>& labels(int p) const;

  /// d_p : C_p -> C_{p-1}; a zero matrix of the right shape outside the stored range.
  IntegerMatrix boundary(int p) const;

  /// True iff d_{p-1} d_p = 0 for every p.
  bool squares_to_zero() const;

 private:
  int lowest_ = 0;
  std::vector<std::vector<std::string>> labels_;
  std::vector<IntegerMatrix> boundaries_;
};

/// Betti numbers and torsion coefficients per degree, starting at lowest_degree.
struct HomologySummary {
  int lowest_degree = 0;
  std::vector<std::size_t> betti;
  std::vector<std::vector<Integer>> torsion;

  std::size_t betti_at(int k) const;
  const std::vector<Integer>& torsion_at(int k) const;
  /// Minimal number of generators of the torsion subgroup in degree k.
  std::size_t mu_at(int k) const { return torsion_at(k).size(); }
  int top_degree() const { return lowest_degree + static_cast<int>(betti.size()) - 1; }
  bool is_trivial() const;

  /// Degree-wise comparison; degrees missing on one side count as zero.
  friend bool operator==(const HomologySummary& a, const HomologySummary& b);
};

/// Integer homology (free ranks plus invariant factors) or rational homology
/// (dimensions only). Throws NotAChainComplex when d^2 != 0.
HomologySummary homology(const ChainComplex& complex, Coefficients coefficients = Coefficients::Integers);

/// Per-degree matrices of a map f_p : A_p -> B_p for p in [lowest, top] of the source.
using ChainMap = std::vector<IntegerMatrix>;

bool is_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& map);

/// Cone of f: cone_k = A_{k-1} (+) B_k with D(a, b) = (-d a, d b + f a).
ChainComplex mapping_cone(const ChainComplex& source, const ChainComplex& target, const ChainMap& map);

/// f is a quasi-isomorphism iff its mapping cone has trivial integer homology.
bool is_quasi_isomorphism(const ChainComplex& source, const ChainComplex& target, const ChainMap& map);

}  // namespace mbposet
