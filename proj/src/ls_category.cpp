#include "mbposet/ls_category.hpp"

#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"
#include "mbposet/smith.hpp"

namespace mbposet {
namespace {

IntegerMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
  IntegerMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

// Boundaries of the subcomplex spanned by the columns of `basis[i]` (degree
// lowest + i), or nullopt when d leaves the span.
std::optional<std::vector<IntegerMatrix>> restricted_boundaries(const ChainComplex& ambient,
                                                                const std::vector<IntegerMatrix>& basis) {
  std::vector<IntegerMatrix> out;
  for (std::size_t i = 1; i < basis.size(); ++i) {
    const int k = ambient.lowest_degree() + static_cast<int>(i);
    auto d = solve(basis[i - 1], ambient.boundary(k) * basis[i]);
    if (!d) return std::nullopt;
    out.push_back(std::move(*d));
  }
  return out;
}

}  // namespace

std::size_t hccat(const HomologySummary& h) {
  std::size_t total = 0;
  for (int k = h.lowest_degree; k <= h.top_degree(); ++k) total += h.betti_at(k) + 2 * h.mu_at(k);
  return total;
}

std::size_t hccat(const ChainComplex& complex) { return hccat(homology(complex)); }

std::size_t hccat(const Poset& poset) { return hccat(poset_homology(poset)); }

PitcherSubcomplex pitcher_subcomplex(const ChainComplex& complex) {
  const int lo = complex.lowest_degree();
  const int top = complex.top_degree();
  std::vector<SmithDecomposition> snf;  // snf[i] decomposes d_{lo + i}
  for (int k = lo; k <= top + 1; ++k) snf.push_back(smith_normal_form(complex.boundary(k)));

  PitcherSubcomplex out;
  std::vector<IntegerMatrix> basis;
  std::vector<std::vector<std::string>> labels;
  for (int k = lo; k <= top; ++k) {
    const std::size_t n = complex.rank(k);
    const auto i = static_cast<std::size_t>(k - lo);
    const SmithDecomposition& above = snf[i + 1];  // d_{k+1} = U D V
    const SmithDecomposition& here = snf[i];       // d_k
    std::vector<std::vector<Integer>> cols;
    std::vector<std::string> names;

    const std::size_t r = above.rank();
    const IntegerMatrix rest = above.left.columns(r, n - r);
    const IntegerMatrix free = rest * kernel_basis(complex.boundary(k) * rest);
    for (std::size_t j = 0; j < free.cols(); ++j) {
      cols.push_back(free.column(j));
      names.push_back("z" + std::to_string(k) + "." + std::to_string(j));
    }
    for (std::size_t j = 0; j < r; ++j)
      if (above.invariant_factors[j] > 1) {
        cols.push_back(above.left.column(j));
        names.push_back("t" + std::to_string(k) + "." + std::to_string(j));
      }
    // d_k V⁻¹ e_j = d_j u_j: these chains bound multiples of the torsion cycles below.
    for (std::size_t j = 0; j < here.rank(); ++j)
      if (here.invariant_factors[j] > 1) {
        cols.push_back(here.right_inverse.column(j));
        names.push_back("l" + std::to_string(k) + "." + std::to_string(j));
      }
    basis.push_back(from_columns(n, cols));
    labels.push_back(std::move(names));
    out.rank_profile.push_back(cols.size());
  }

  out.inclusion = basis;
  auto boundaries = restricted_boundaries(complex, basis);
  if (!boundaries) throw Error(ErrorCode::NotASubcomplex, "constructed generators are not closed under the boundary");
  out.complex = ChainComplex(lo, std::move(labels), std::move(*boundaries));
  out.chain_map = is_chain_map(out.complex, complex, out.inclusion);
  out.injective = true;
  for (const auto& m : basis) out.injective = out.injective && rational_rank(m) == m.cols();
  out.quasi_isomorphism = out.chain_map && is_quasi_isomorphism(out.complex, complex, out.inclusion);
  return out;
}

FlowData flow_operator(const AdmissiblePoset& poset, const Matching& morse_matching) {
  const Poset& x = poset.poset();
  if (!is_morse_matching(x, morse_matching)) throw Error(ErrorCode::NotMorseMatching, "matching has closed orbits");
  const GradedPoset& graded = poset.graded();
  const CellularComplex& cellular = poset.cellular();
  const ChainComplex& c = cellular.chains();
  const std::size_t dim = graded.dimension();

  FlowData out;
  out.critical = critical_counts(graded, morse_matching);
  for (std::size_t p = 0; p <= dim; ++p) {
    IntegerMatrix v(c.rank(static_cast<int>(p) + 1), c.rank(static_cast<int>(p)));
    for (Element e : graded.level(p))
      if (auto y = morse_matching.target(e)) v(cellular.position(*y), cellular.position(e)) = -cellular.incidence(*y, e);
    out.V.push_back(std::move(v));
  }
  std::vector<IntegerMatrix> basis;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t p = 0; p <= dim; ++p) {
    const int k = static_cast<int>(p);
    IntegerMatrix phi = IntegerMatrix::identity(c.rank(k)) + c.boundary(k + 1) * out.V[p];
    if (p > 0) phi = phi + out.V[p - 1] * c.boundary(k);
    IntegerMatrix invariant = kernel_basis(phi - IntegerMatrix::identity(c.rank(k)));
    out.invariant_ranks.push_back(invariant.cols());
    std::vector<std::string> names;
    for (std::size_t j = 0; j < invariant.cols(); ++j) names.push_back("phi" + std::to_string(p) + "." + std::to_string(j));
    labels.push_back(std::move(names));
    out.phi.push_back(std::move(phi));
    basis.push_back(std::move(invariant));
  }
  out.ranks_match = out.invariant_ranks == out.critical;
  out.inclusion = basis;
  if (auto boundaries = restricted_boundaries(c, basis)) {
    out.closed = true;
    out.invariant_complex = ChainComplex(0, std::move(labels), std::move(*boundaries));
    out.quasi_isomorphism = is_quasi_isomorphism(out.invariant_complex, c, out.inclusion);
  }
  return out;
}

LsReport ls_bound_check(const AdmissiblePoset& poset, const Matching& matching) {
  const Poset& x = poset.poset();
  const MorseSmaleVerdict ms = is_morse_smale(poset, matching);
  if (!ms.morse_smale) throw Error(ErrorCode::NotMorseSmale, "an orbit class is not a single closed orbit");

  LsReport report;
  report.hccat = hccat(poset.cellular().chains());
  for (const auto& set : basic_sets(x, matching).sets) {
    report.basic_set_bound += set.critical ? 1 : 2;
    if (set.critical) continue;
    const std::size_t measured = hccat(x.induced(set.elements));
    if (measured != 2)
      report.warnings.push_back("orbit class at " + x.name(set.elements.front()) + " has hccat " +
                                std::to_string(measured) + " as a subspace");
  }
  const auto c = critical_counts(poset.graded(), matching);
  const auto a = orbit_counts(poset.graded(), ms.orbits);
  for (std::size_t p = 0; p < c.size(); ++p) {
    report.m_star.push_back(c[p] + a[p] + (p > 0 ? a[p - 1] : 0));
    report.m_star_total += report.m_star.back();
  }
  const FlowData flow = flow_operator(poset, perturb_to_morse(x, matching).matching);
  report.flow_ranks = flow.invariant_ranks;
  report.flow_ranks_match = flow.invariant_ranks == report.m_star;
  report.flow_verified = flow.holds();
  report.basic_set_bound_holds = report.hccat <= report.basic_set_bound;
  report.m_star_bound_holds = report.hccat <= report.m_star_total;
  return report;
}

CriticalPointBound critical_point_bound(const AdmissiblePoset& poset, const std::vector<Rational>& values) {
  morse_function_to_matching(poset.poset(), values);
  CriticalPointBound report;
  report.hccat = hccat(poset.cellular().chains());
  report.critical = is_morse_function(poset.poset(), values).critical.size();
  report.holds = report.hccat <= report.critical;
  return report;
}

bool hccat_face_poset_consistency(const SimplicialComplex& complex) {
  return hccat(simplicial_chain_complex(complex)) == hccat(cellular_chain_complex(face_poset(complex).poset()).chains());
}

}  // namespace mbposet
