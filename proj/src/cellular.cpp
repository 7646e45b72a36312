#include "mbposet/cellular.hpp"

#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"
#include "mbposet/smith.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mbposet {
namespace {

bool is_homology_sphere(const HomologySummary& reduced, int dim) {
  for (int k = reduced.lowest_degree; k <= reduced.top_degree(); ++k) {
    if (!reduced.torsion_at(k).empty()) return false;
    if (reduced.betti_at(k) != (k == dim ? 1u : 0u)) return false;
  }
  return reduced.betti_at(dim) == 1;
}

std::vector<std::string> sorted_names(const Poset& poset, const Chain& chain) {
  std::vector<std::string> names;
  for (Element e : chain) names.push_back(poset.name(e));
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  return names;
}

bool names_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& s, const auto& t) { return natural_less(s, t); });
}

}  // namespace

CellularityReport check_cellularity(const Poset& poset) {
  CellularityReport report;
  auto graded = GradedPoset::from(poset);
  if (!graded) return report;
  report.is_graded = true;
  for (Element x = 0; x < poset.size(); ++x) {
    const int p = static_cast<int>(graded->degree(x));
    const std::vector<Element> below = poset.down_set_elements(x, true);
    HomologySummary h = poset_homology(poset.induced(below), true);
    if (!is_homology_sphere(h, p - 1)) report.non_spheres.push_back({x, std::move(h)});
    for (Element w : poset.lower_covers(x)) {
      std::vector<Element> rest;
      for (Element e : below)
        if (e != w) rest.push_back(e);
      HomologySummary hw = poset_homology(poset.induced(rest), true);
      if (!hw.is_trivial()) report.non_acyclic.push_back({w, x, std::move(hw)});
    }
  }
  report.is_cellular = report.non_spheres.empty();
  report.is_homologically_admissible = report.non_acyclic.empty();
  return report;
}

SphereGenerator sphere_generator(const GradedPoset& graded, Element x) {
  const Poset& poset = graded.poset();
  SphereGenerator gen;
  gen.x = x;
  gen.degree = graded.degree(x);
  if (gen.degree == 0) {
    gen.cycle.push_back({Chain{}, Integer(1)});
    return gen;
  }
  const int top = static_cast<int>(gen.degree) - 1;
  const std::vector<Element> below = poset.down_set_elements(x, true);
  const Poset sub = poset.induced(below);
  const std::vector<Element> order = sub.linear_extension();
  const SimplicialComplex k = order_complex(sub);
  const ChainComplex c = simplicial_chain_complex(k, true);
  if (!is_homology_sphere(homology(c), top))
    throw Error(ErrorCode::NotCellular, "the elements below " + poset.name(x) + " do not form a homology sphere");

  // No simplices above dimension top, so H̃_top is the cycle group itself.
  const IntegerMatrix kernel = kernel_basis(c.boundary(top));
  if (kernel.cols() != 1) throw Error(ErrorCode::NotCellular, "top cycle group below " + poset.name(x) + " is not cyclic");

  std::vector<std::pair<Chain, Integer>> cycle;
  const auto& simplices = k.simplices(static_cast<std::size_t>(top));
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (kernel(i, 0) == 0) continue;
    Chain chain;
    for (auto v : simplices[i]) chain.push_back(below[order[v]]);
    cycle.push_back({std::move(chain), kernel(i, 0)});
  }
  std::vector<std::vector<std::string>> keys;
  for (const auto& [chain, coeff] : cycle) keys.push_back(sorted_names(poset, chain));
  std::vector<std::size_t> perm(cycle.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return names_less(keys[a], keys[b]); });
  const bool negate = !perm.empty() && cycle[perm.front()].second < 0;
  for (std::size_t i : perm) {
    auto term = cycle[i];
    if (negate) term.second = -term.second;
    gen.cycle.push_back(std::move(term));
  }
  return gen;
}

CellularComplex::CellularComplex(GradedPoset poset, Incidence incidence, std::vector<SphereGenerator> generators)
    : poset_(std::move(poset)), incidence_(std::move(incidence)), generators_(std::move(generators)) {
  const Poset& p = poset_.poset();
  for (const auto& [key, eps] : incidence_)
    if (!p.covers(key.second, key.first)) throw std::invalid_argument("incidence on a pair that is not a cover");

  const std::size_t dim = poset_.dimension();
  position_.assign(p.size(), 0);
  std::vector<std::vector<std::string>> labels(dim + 1);
  for (std::size_t d = 0; d <= dim; ++d)
    for (Element e : poset_.level(d)) {
      position_[e] = labels[d].size();
      labels[d].push_back(p.name(e));
    }
  std::vector<IntegerMatrix> boundaries;
  for (std::size_t d = 1; d <= dim; ++d) boundaries.emplace_back(labels[d - 1].size(), labels[d].size());
  for (const auto& [key, eps] : incidence_) {
    const auto [x, w] = key;
    boundaries[poset_.degree(x) - 1](position_[w], position_[x]) = eps;
  }
  chains_ = ChainComplex(0, std::move(labels), std::move(boundaries));
  if (!chains_.squares_to_zero()) throw Error(ErrorCode::InconsistentIncidence, "cellular differential does not square to zero");
}

Integer CellularComplex::incidence(Element x, Element w) const {
  auto it = incidence_.find({x, w});
  return it == incidence_.end() ? Integer(0) : it->second;
}

std::vector<std::tuple<Element, Element, Integer>> CellularComplex::incidence_table() const {
  std::vector<std::tuple<Element, Element, Integer>> table;
  const Poset& p = poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element w : p.lower_covers(x)) table.emplace_back(x, w, incidence(x, w));
  return table;
}

CellularComplex CellularComplex::with_gauge_flips(const std::vector<bool>& flip) const {
  Incidence flipped = incidence_;
  for (auto& [key, eps] : flipped)
    if (flip.at(key.first) != flip.at(key.second)) eps = -eps;
  std::vector<SphereGenerator> gens = generators_;
  for (auto& g : gens)
    if (flip.at(g.x))
      for (auto& term : g.cycle) term.second = -term.second;
  return CellularComplex(poset_, std::move(flipped), std::move(gens));
}

CellularComplex cellular_chain_complex(const Poset& poset) { return cellular_chain_complex(poset, check_cellularity(poset)); }

CellularComplex cellular_chain_complex(const Poset& poset, const CellularityReport& report) {
  if (!report.is_graded) throw Error(ErrorCode::NotGraded, "cellular complex needs a graded poset");
  if (!report.is_cellular)
    throw Error(ErrorCode::NotCellular,
                "the elements below " + poset.name(report.non_spheres.front().x) + " do not form a homology sphere");
  GradedPoset graded = GradedPoset::require(poset);

  std::vector<SphereGenerator> gens;
  for (Element x = 0; x < poset.size(); ++x) gens.push_back(sphere_generator(graded, x));

  CellularComplex::Incidence incidence;
  for (Element x = 0; x < poset.size(); ++x) {
    const std::size_t p = graded.degree(x);
    if (p == 0) continue;
    const auto& covers = poset.lower_covers(x);
    // Rows: (p−1)-chains of K(X^(p−1)) met by the target or a basis class.
    std::map<Chain, std::size_t> rows;
    auto row = [&](const Chain& c) { return rows.emplace(c, rows.size()).first->second; };
    std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;
    for (Element w : covers) {
      std::vector<std::pair<std::size_t, Integer>> col;
      for (const auto& [chain, coeff] : gens[w].cycle) {
        Chain coned = chain;
        coned.push_back(w);
        col.push_back({row(coned), coeff});
      }
      columns.push_back(std::move(col));
    }
    std::vector<std::pair<std::size_t, Integer>> target;
    for (const auto& [chain, coeff] : gens[x].cycle) target.push_back({row(chain), p % 2 == 0 ? coeff : Integer(-coeff)});

    IntegerMatrix a(rows.size(), covers.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [r, v] : columns[j]) a(r, j) = v;
    std::vector<Integer> b(rows.size());
    for (const auto& [r, v] : target) b[r] = v;
    auto solution = solve(a, b);
    if (!solution)
      throw Error(ErrorCode::InconsistentIncidence,
                  "boundary of the generator of " + poset.name(x) + " is not a combination of its faces");
    for (std::size_t j = 0; j < covers.size(); ++j) incidence[{x, covers[j]}] = (*solution)[j];
  }

  CellularComplex complex(std::move(graded), std::move(incidence), std::move(gens));
  if (report.is_homologically_admissible)
    for (const auto& [x, w, eps] : complex.incidence_table())
      if (abs(eps) != 1)
        throw Error(ErrorCode::NonUnitIncidenceOnAdmissible,
                    "incidence of " + poset.name(x) + " on " + poset.name(w) + " is " + eps.str());
  return complex;
}

CellularComplex face_poset_cellular_complex(const SimplicialComplex& complex) {
  GradedPoset graded = face_poset(complex);
  // face_poset declares simplices by dimension, then in simplices(d) order.
  std::vector<std::size_t> offset(1, 0);
  for (int d = 0; d <= complex.dimension(); ++d)
    offset.push_back(offset.back() + complex.simplices(static_cast<std::size_t>(d)).size());
  CellularComplex::Incidence incidence;
  for (int d = 1; d <= complex.dimension(); ++d) {
    const auto& layer = complex.simplices(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < layer.size(); ++j)
      for (std::size_t i = 0; i < layer[j].size(); ++i) {
        Simplex face = layer[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        Element x = offset[d] + j;
        Element w = offset[d - 1] + *complex.index_of(face);
        incidence[{x, w}] = (i % 2 == 0) ? 1 : -1;
      }
  }
  return CellularComplex(std::move(graded), std::move(incidence));
}

bool gauge_equivalent(const CellularComplex& a, const CellularComplex& b) {
  const Poset& p = a.poset();
  if (!(p == b.poset())) return false;
  std::vector<int> sign(p.size(), 0);
  for (Element start = 0; start < p.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<Element> queue{start};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      auto visit = [&](Element upper, Element lower, Element other) {
        const Integer ea = a.incidence(upper, lower);
        const Integer eb = b.incidence(upper, lower);
        if (ea == 0 || eb == 0) return ea == eb;
        int rel;
        if (ea == eb) rel = 1;
        else if (ea == -eb) rel = -1;
        else return false;
        const int want = sign[x] * rel;
        if (sign[other] == 0) {
          sign[other] = want;
          queue.push_back(other);
          return true;
        }
        return sign[other] == want;
      };
      for (Element w : p.lower_covers(x))
        if (!visit(x, w, w)) return false;
      for (Element y : p.upper_covers(x))
        if (!visit(y, x, y)) return false;
    }
  }
  return true;
}

bool verify_cellular_isomorphism(const Poset& poset) {
  return homology(cellular_chain_complex(poset).chains()) == poset_homology(poset);
}

AdmissiblePoset AdmissiblePoset::verify(const Poset& poset) {
  if (poset.empty()) throw Error(ErrorCode::EmptyPoset, "empty poset");
  CellularityReport report = check_cellularity(poset);
  if (!report.is_graded) throw Error(ErrorCode::NotGraded, "poset is not graded");
  if (!report.is_homologically_admissible) {
    const auto& wit = report.non_acyclic.front();
    throw Error(ErrorCode::NotAdmissible, "removing " + poset.name(wit.w) + " below " + poset.name(wit.x) +
                                              " leaves a non-acyclic subposet");
  }
  CellularComplex cellular = cellular_chain_complex(poset, report);
  return AdmissiblePoset(std::move(report), std::move(cellular));
}

}  // namespace mbposet
