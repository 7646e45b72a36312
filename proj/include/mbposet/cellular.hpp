#pragma once

#include "mbposet/chain_complex.hpp"
#include "mbposet/poset.hpp"
#include "mbposet/simplicial.hpp"

#include <map>
#include <optional>
#include <tuple>

namespace mbposet {

struct CellularityReport {
  struct ElementWitness {
    Element x;
    HomologySummary reduced;  // reduced homology of Û_x
  };
  struct CoverWitness {
    Element w;
    Element x;
    HomologySummary reduced;  // reduced homology of Û_x − {w}
  };

  bool is_graded = false;
  bool is_cellular = false;
  bool is_homologically_admissible = false;
  std::vector<ElementWitness> non_spheres;
  std::vector<CoverWitness> non_acyclic;
};

/// Both verdicts are computed independently. Non-graded input stops after the
/// gradedness check with every flag false.
CellularityReport check_cellularity(const Poset& poset);

/// A chain of X written bottom to top.
using Chain = std::vector<Element>;

/// Integer (p−1)-cycle of K(Û_x) generating its top reduced homology. For
/// p = 0 it is the empty chain with coefficient 1. The first nonzero
/// coefficient, in lexicographic order of the sorted element-name lists, is
/// positive.
struct SphereGenerator {
  Element x = 0;
  std::size_t degree = 0;
  std::vector<std::pair<Chain, Integer>> cycle;
};

/// Throws NotCellular when Û_x is not a homology (p−1)-sphere.
SphereGenerator sphere_generator(const GradedPoset& poset, Element x);

/// Cellular chain complex of a cellular poset: C_p is free on X^(=p) and
/// d(x) = Σ_{w≺x} ε(x,w) w.
class CellularComplex {
 public:
  using Incidence = std::map<std::pair<Element, Element>, Integer>;  // (x, w) -> ε(x, w)

  CellularComplex(GradedPoset poset, Incidence incidence, std::vector<SphereGenerator> generators = {});

  const GradedPoset& graded() const noexcept { return poset_; }
  const Poset& poset() const noexcept { return poset_.poset(); }
  const ChainComplex& chains() const noexcept { return chains_; }
  /// ε(x, w); zero when w is not covered by x.
  Integer incidence(Element x, Element w) const;
  /// (x, w, ε) for every cover, ordered by (x, w).
  std::vector<std::tuple<Element, Element, Integer>> incidence_table() const;
  /// Empty when built by the face-poset fast path.
  const std::vector<SphereGenerator>& generators() const noexcept { return generators_; }
  /// Row/column of x in the boundary matrices of its degree.
  std::size_t position(Element x) const { return position_.at(x); }

  /// Replaces g_x by −g_x for every flagged x: row and column x of d change sign.
  CellularComplex with_gauge_flips(const std::vector<bool>& flip) const;

 private:
  GradedPoset poset_;
  Incidence incidence_;
  std::vector<SphereGenerator> generators_;
  std::vector<std::size_t> position_;
  ChainComplex chains_;
};

/// Incidences from sphere generators: (−1)^p g_x is solved exactly in the
/// basis {g_w · w} of H_{p−1}(K(X^(p−1)), K(X^(p−2))). Throws NotGraded,
/// NotCellular, InconsistentIncidence or NonUnitIncidenceOnAdmissible.
CellularComplex cellular_chain_complex(const Poset& poset);
CellularComplex cellular_chain_complex(const Poset& poset, const CellularityReport& report);

/// ε(σ, σ − v_i) = (−1)^i on the face poset of K.
CellularComplex face_poset_cellular_complex(const SimplicialComplex& complex);

/// True iff both complexes live on the same poset, agree on which covers have
/// nonzero incidence, and ε_a(x,w) = s_x s_w ε_b(x,w) for some signs s.
bool gauge_equivalent(const CellularComplex& a, const CellularComplex& b);

/// Cellular homology equals the homology of the order complex.
bool verify_cellular_isomorphism(const Poset& poset);

/// A homologically admissible poset with its cellular complex. Construction
/// verifies the hypotheses.
class AdmissiblePoset {
 public:
  /// Throws EmptyPoset, NotGraded or NotAdmissible.
  static AdmissiblePoset verify(const Poset& poset);

  const Poset& poset() const noexcept { return cellular_.poset(); }
  const GradedPoset& graded() const noexcept { return cellular_.graded(); }
  const CellularityReport& report() const noexcept { return report_; }
  const CellularComplex& cellular() const noexcept { return cellular_; }

 private:
  AdmissiblePoset(CellularityReport report, CellularComplex cellular)
      : report_(std::move(report)), cellular_(std::move(cellular)) {}
  CellularityReport report_;
  CellularComplex cellular_;
};

}  // namespace mbposet
