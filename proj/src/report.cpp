#include "mbposet/report.hpp"

#include "mbposet/io.hpp"

namespace mbposet {
namespace {

Json names(const Poset& poset, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (Element e : elements) out.push_back(poset.name(e));
  return out;
}

Json matrix_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

bool is_record(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [key, value] : j.items())
    if (value.is_structured()) return false;
  return true;
}

std::string record_line(const Json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (!out.empty()) out += "  ";
    out += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
  return true;
}

void render(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out += indent + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
      } else {
        out += indent + key + ":\n";
        render(value, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_record(e)) {
        out += indent + "- " + record_line(e) + "\n";
      } else if (is_flat(e)) {
        out += indent + "- " + e.dump() + "\n";
      } else {
        out += indent + "-\n";
        render(e, indent + "  ", out);
      }
    }
  } else {
    out += indent + j.dump() + "\n";
  }
}

}  // namespace

Json report_document(const std::string& command) {
  Json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  return doc;
}

Json to_json(const Integer& value) {
  if (auto small = to_int64(value)) return *small;
  return value.str();
}

Json to_json(const HomologySummary& h) {
  Json out;
  out["lowest_degree"] = h.lowest_degree;
  out["betti"] = h.betti;
  Json torsion = Json::array();
  Json mu = Json::array();
  for (int k = h.lowest_degree; k <= h.top_degree(); ++k) {
    Json t = Json::array();
    for (const auto& f : h.torsion_at(k)) t.push_back(to_json(f));
    torsion.push_back(std::move(t));
    mu.push_back(h.mu_at(k));
  }
  out["torsion"] = std::move(torsion);
  out["mu"] = std::move(mu);
  return out;
}

Json to_json(const Poset& poset, const CellularityReport& report) {
  Json out;
  out["graded"] = report.is_graded;
  out["cellular"] = report.is_cellular;
  out["admissible"] = report.is_homologically_admissible;
  Json spheres = Json::array();
  for (const auto& w : report.non_spheres) spheres.push_back({{"element", poset.name(w.x)}, {"reduced_homology", to_json(w.reduced)}});
  Json acyclic = Json::array();
  for (const auto& w : report.non_acyclic)
    acyclic.push_back({{"cover", {poset.name(w.w), poset.name(w.x)}}, {"reduced_homology", to_json(w.reduced)}});
  out["non_sphere_witnesses"] = std::move(spheres);
  out["non_acyclic_witnesses"] = std::move(acyclic);
  return out;
}

Json to_json(const CellularComplex& complex) {
  const Poset& p = complex.poset();
  Json out;
  Json incidence = Json::array();
  for (const auto& [x, w, eps] : complex.incidence_table()) incidence.push_back({p.name(x), p.name(w), to_json(eps)});
  out["incidence"] = std::move(incidence);
  Json boundaries = Json::array();
  const ChainComplex& c = complex.chains();
  for (int k = c.lowest_degree() + 1; k <= c.top_degree(); ++k)
    boundaries.push_back({{"degree", k}, {"rows", c.labels(k - 1)}, {"cols", c.labels(k)}, {"matrix", matrix_json(c.boundary(k))}});
  out["boundaries"] = std::move(boundaries);
  return out;
}

Json to_json(const Poset& poset, const BasicSetDecomposition& decomposition) {
  Json out;
  out["critical"] = names(poset, decomposition.critical());
  Json classes = Json::array();
  for (const BasicSet* set : decomposition.orbit_classes())
    classes.push_back({{"index", set->index}, {"elements", names(poset, set->elements)}});
  out["orbit_classes"] = std::move(classes);
  out["recurrent_set"] = names(poset, decomposition.recurrent_set());
  return out;
}

Json to_json(const Poset& poset, const ClosedOrbit& orbit) {
  return {{"index", orbit.index}, {"cycle", names(poset, orbit.sequence())}};
}

Json to_json(const InequalityReport& report) {
  Json out;
  out["m"] = report.m;
  out["b"] = report.b;
  out["mu"] = report.mu;
  out["c"] = report.c;
  out["A"] = report.A;
  out["A1"] = report.A1;
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    Json rows = Json::array();
    for (const auto& r : v.rows) rows.push_back({{"k", r.k}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}});
    verdicts.push_back({{"name", v.name}, {"holds", v.holds()}, {"rows", std::move(rows)}});
  }
  out["verdicts"] = std::move(verdicts);
  out["holds"] = report.holds();
  return out;
}

Json to_json(const Poset& poset, const IntervalCheck& check) {
  Json out;
  out["a"] = format_rational(check.a);
  out["b"] = format_rational(check.b);
  out["kind"] = check.critical ? "critical-attachment" : "regular-interval";
  out["passed"] = check.passed;
  if (check.attachment) {
    const auto& at = *check.attachment;
    out["critical_value"] = format_rational(at.critical_value);
    out["class"] = names(poset, at.cls);
    out["boundary"] = names(poset, at.boundary);
    out["added"] = names(poset, at.added);
    out["added_is_class"] = at.added_is_class;
    out["boundary_in_sublevel"] = at.boundary_in_sublevel;
    out["class_disjoint_from_sublevel"] = at.class_disjoint_from_sublevel;
  }
  return out;
}

Json to_json(const PitcherSubcomplex& pitcher) {
  return {{"lowest_degree", pitcher.complex.lowest_degree()},
          {"rank_profile", pitcher.rank_profile},
          {"chain_map", pitcher.chain_map},
          {"injective", pitcher.injective},
          {"quasi_isomorphism", pitcher.quasi_isomorphism}};
}

Json to_json(const FlowData& flow) {
  return {{"invariant_ranks", flow.invariant_ranks},
          {"critical", flow.critical},
          {"closed", flow.closed},
          {"ranks_match", flow.ranks_match},
          {"quasi_isomorphism", flow.quasi_isomorphism}};
}

Json to_json(const LsReport& report) {
  return {{"hccat", report.hccat},
          {"basic_set_bound", report.basic_set_bound},
          {"basic_set_bound_holds", report.basic_set_bound_holds},
          {"m_star", report.m_star},
          {"m_star_total", report.m_star_total},
          {"m_star_bound_holds", report.m_star_bound_holds},
          {"flow_ranks", report.flow_ranks},
          {"flow_ranks_match", report.flow_ranks_match},
          {"flow_verified", report.flow_verified},
          {"warnings", report.warnings},
          {"holds", report.holds()}};
}

std::string render_table(const Json& doc) {
  std::string out;
  render(doc, "", out);
  return out;
}

}  // namespace mbposet
