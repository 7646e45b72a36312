#include "mbposet/inequalities.hpp"

#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"

#include <algorithm>

namespace mbposet {
namespace {

long long alternating_tail(const std::vector<std::size_t>& v, std::size_t k) {
  long long sum = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    const long long term = k - i < v.size() ? static_cast<long long>(v[k - i]) : 0;
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

std::size_t at(const std::vector<std::size_t>& v, std::size_t k) { return k < v.size() ? v[k] : 0; }

std::vector<std::size_t> betti_vector(const HomologySummary& h, std::size_t dim) {
  std::vector<std::size_t> b(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) b[k] = h.betti_at(static_cast<int>(k));
  return b;
}

std::vector<std::size_t> mu_vector(const HomologySummary& h, std::size_t dim) {
  std::vector<std::size_t> mu(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) mu[k] = h.mu_at(static_cast<int>(k));
  return mu;
}

InequalityVerdict orbit_family(const std::string& name, const std::vector<std::size_t>& orbits,
                               const std::vector<std::size_t>& c, const std::vector<std::size_t>& mu,
                               const std::vector<std::size_t>& b, std::size_t dim) {
  InequalityVerdict v{name, {}};
  for (std::size_t k = 0; k <= dim; ++k) {
    InequalityRow row;
    row.k = static_cast<int>(k);
    row.lhs = static_cast<long long>(at(orbits, k)) + alternating_tail(c, k);
    row.rhs = static_cast<long long>(at(mu, k)) + alternating_tail(b, k);
    row.holds = row.lhs >= row.rhs;
    v.rows.push_back(row);
  }
  return v;
}

MorseSmaleVerdict require_morse_smale(const AdmissiblePoset& poset, const Matching& matching) {
  MorseSmaleVerdict verdict = is_morse_smale(poset, matching);
  if (!verdict.morse_smale) throw Error(ErrorCode::NotMorseSmale, "orbit inequalities need a Morse-Smale matching");
  return verdict;
}

}  // namespace

MorseBottNumbers morse_bott_numbers(const AdmissiblePoset& poset, const Matching& matching) {
  const Poset& x = poset.poset();
  const std::size_t dim = poset.graded().dimension();
  MorseBottNumbers out;
  out.m.assign(dim + 1, 0);
  out.torsion.assign(dim + 1, {});
  for (const auto& set : basic_sets(x, matching).sets) {
    const std::vector<Element> closure = x.down_closure(set.elements);
    std::vector<Element> rim;  // Λ̇ in local indices of the closure
    for (std::size_t i = 0; i < closure.size(); ++i)
      if (!std::binary_search(set.elements.begin(), set.elements.end(), closure[i])) rim.push_back(i);
    HomologySummary h = relative_poset_homology(x.induced(closure), rim);
    for (std::size_t k = 0; k <= dim; ++k) {
      out.m[k] += h.betti_at(static_cast<int>(k));
      const auto& t = h.torsion_at(static_cast<int>(k));
      out.torsion[k].insert(out.torsion[k].end(), t.begin(), t.end());
    }
    out.relative.push_back(std::move(h));
  }
  return out;
}

bool relative_homology_window(const AdmissiblePoset& poset, const Matching& matching) {
  const auto decomposition = basic_sets(poset.poset(), matching);
  const auto numbers = morse_bott_numbers(poset, matching);
  for (std::size_t i = 0; i < decomposition.sets.size(); ++i) {
    const BasicSet& set = decomposition.sets[i];
    const HomologySummary& h = numbers.relative[i];
    const int p = static_cast<int>(set.index);
    for (int k = h.lowest_degree; k <= h.top_degree(); ++k) {
      const bool nonzero = h.betti_at(k) != 0 || !h.torsion_at(k).empty();
      if (set.critical) {
        if (k == p ? (h.betti_at(k) != 1 || !h.torsion_at(k).empty()) : nonzero) return false;
      } else if (nonzero && k != p && k != p + 1) {
        return false;
      }
    }
    if (set.critical && h.betti_at(p) != 1) return false;
  }
  return true;
}

bool InequalityVerdict::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const InequalityRow& r) { return r.holds; });
}

bool InequalityReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const InequalityVerdict& v) { return v.holds(); });
}

const InequalityVerdict* InequalityReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

InequalityReport strong_morse_bott(const AdmissiblePoset& poset, const Matching& matching, Coefficients coefficients) {
  const std::size_t dim = poset.graded().dimension();
  const HomologySummary h = homology(poset.cellular().chains(), coefficients);
  InequalityReport report;
  report.m = morse_bott_numbers(poset, matching).m;
  report.b = betti_vector(h, dim);
  report.mu = mu_vector(h, dim);
  report.c = critical_counts(poset.graded(), matching);

  InequalityVerdict strong{"strong", {}}, weak{"weak", {}}, euler{"euler", {}};
  for (std::size_t k = 0; k <= dim; ++k) {
    InequalityRow s{static_cast<int>(k), alternating_tail(report.m, k), alternating_tail(report.b, k)};
    s.holds = s.lhs >= s.rhs;
    strong.rows.push_back(s);
    InequalityRow w{static_cast<int>(k), static_cast<long long>(report.m[k]), static_cast<long long>(report.b[k])};
    w.holds = w.lhs >= w.rhs;
    weak.rows.push_back(w);
  }
  InequalityRow e{static_cast<int>(dim), 0, 0};
  for (std::size_t k = 0; k <= dim; ++k) {
    const long long sign = k % 2 == 0 ? 1 : -1;
    e.lhs += sign * static_cast<long long>(report.m[k]);
    e.rhs += sign * static_cast<long long>(report.b[k]);
  }
  e.holds = e.lhs == e.rhs;
  euler.rows.push_back(e);
  report.verdicts = {strong, weak, euler};
  return report;
}

InequalityReport orbit_inequalities_torsion(const AdmissiblePoset& poset, const Matching& matching) {
  const MorseSmaleVerdict ms = require_morse_smale(poset, matching);
  const std::size_t dim = poset.graded().dimension();
  const HomologySummary h = homology(poset.cellular().chains(), Coefficients::Integers);
  InequalityReport report;
  report.b = betti_vector(h, dim);
  report.mu = mu_vector(h, dim);
  report.c = critical_counts(poset.graded(), matching);
  report.A = orbit_counts(poset.graded(), ms.orbits);
  report.verdicts.push_back(orbit_family("torsion-orbit", report.A, report.c, report.mu, report.b, dim));
  return report;
}

InequalityReport orbit_inequalities_multiplicity(const AdmissiblePoset& poset, const Matching& matching) {
  const MorseSmaleVerdict ms = require_morse_smale(poset, matching);
  const std::size_t dim = poset.graded().dimension();
  const HomologySummary h = homology(poset.cellular().chains(), Coefficients::Rationals);
  InequalityReport report;
  report.b = betti_vector(h, dim);
  report.c = critical_counts(poset.graded(), matching);
  report.A = orbit_counts(poset.graded(), ms.orbits);
  report.A1.assign(dim + 1, 0);
  for (const auto& orbit : ms.orbits)
    if (orbit_multiplicity(poset.cellular(), orbit) == 1) ++report.A1.at(orbit.index);
  report.verdicts.push_back(orbit_family("multiplicity-orbit", report.A1, report.c, {}, report.b, dim));
  return report;
}

InequalityReport inequality_report(const AdmissiblePoset& poset, const Matching& matching) {
  InequalityReport report = strong_morse_bott(poset, matching);
  if (!morse_smale_orbits(poset.poset(), matching).morse_smale) return report;
  const InequalityReport torsion = orbit_inequalities_torsion(poset, matching);
  const InequalityReport multiplicity = orbit_inequalities_multiplicity(poset, matching);
  report.A = torsion.A;
  report.A1 = multiplicity.A1;
  report.verdicts.push_back(torsion.verdicts.front());
  report.verdicts.push_back(multiplicity.verdicts.front());
  return report;
}

EulerCharacteristics euler_characteristics(const Poset& poset) {
  EulerCharacteristics out;
  const auto f = order_complex(poset).f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) out.order_complex += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f[k]);
  if (auto graded = GradedPoset::from(poset)) {
    long long chi = 0;
    for (Element x = 0; x < poset.size(); ++x) chi += graded->degree(x) % 2 == 0 ? 1 : -1;
    out.graded = chi;
  }
  return out;
}

long long graded_euler_characteristic(const Poset& poset) {
  auto chi = euler_characteristics(poset).graded;
  if (!chi) throw Error(ErrorCode::NotGraded, "graded Euler characteristic needs a graded poset");
  return *chi;
}

}  // namespace mbposet
