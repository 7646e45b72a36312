#include "mbposet/cli.hpp"

#include "mbposet/error.hpp"
#include "mbposet/homology.hpp"
#include "mbposet/io.hpp"
#include "mbposet/random.hpp"
#include "mbposet/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace mbposet {
namespace {

struct Options {
  std::string input;
  std::string kind = "poset";
  std::string space;
  std::string coeff = "int";
  bool reduced = false;
  std::string matching;
  std::string function;
  std::string format = "table";
  std::uint64_t seed = 1;
};

struct Space {
  Poset poset;
  std::optional<SimplicialComplex> complex;
};

struct Outcome {
  explicit Outcome(Json d) : doc(std::move(d)) {}
  Json doc;
  int code = exit_ok;
  std::optional<std::string> raw;  // emitted verbatim in table format
};

// Prefixes errors raised while reading `path` with the file name.
template <class F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

bool looks_like_poset(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return (first != std::string::npos && text[first] == '{') || text.find('<') != std::string::npos;
}

Space load_space(const std::string& path, const std::string& kind, std::ostream& err) {
  if (path.empty()) throw Error(ErrorCode::ParseError, "an input file is required");
  return with_file(path, [&](const std::string& text) {
    const bool simplicial = kind == "simplicial" || (kind == "auto" && !looks_like_poset(text));
    if (simplicial) {
      SimplicialComplex k = parse_simplicial_complex(text);
      Poset p = face_poset(k).poset();
      return Space{std::move(p), std::move(k)};
    }
    Poset p = parse_poset(text);
    if (p.redundant_relations() > 0)
      err << "warning: " << path << ": dropped " << p.redundant_relations() << " relation(s) implied by others\n";
    return Space{std::move(p), std::nullopt};
  });
}

Matching load_matching(const Options& o, const Poset& poset) {
  if (o.matching.empty()) throw Error(ErrorCode::ParseError, "this command needs --matching FILE");
  return with_file(o.matching, [&](const std::string& text) { return parse_matching(poset, text); });
}

std::vector<Rational> load_function(const std::string& path, const Poset& poset) {
  return with_file(path, [&](const std::string& text) { return parse_function(poset, text); });
}

Coefficients coefficients(const Options& o) { return o.coeff == "rat" ? Coefficients::Rationals : Coefficients::Integers; }

Json space_json(const Space& s) {
  const Poset& p = s.poset;
  Json out;
  out["kind"] = s.complex ? "simplicial" : "poset";
  out["elements"] = p.size();
  out["covers"] = p.cover_count();
  out["height"] = p.height();
  out["redundant_relations"] = p.redundant_relations();
  if (s.complex) out["f_vector"] = s.complex->f_vector();
  return out;
}

Json matching_summary(const Poset& poset, const Matching& m) {
  Json out;
  Json pairs = Json::array();
  for (const auto& [x, y] : m.pairs()) pairs.push_back({poset.name(x), poset.name(y)});
  out["pairs"] = std::move(pairs);
  out["morse"] = is_morse_matching(poset, m);
  if (GradedPoset::from(poset)) out["morse_smale"] = morse_smale_orbits(poset, m).morse_smale;
  return out;
}

Outcome cmd_validate(const Options& o, std::ostream& err) {
  Outcome r{report_document("validate")};
  const bool auxiliary = o.kind == "matching" || o.kind == "function";
  if (auxiliary && o.space.empty()) throw Error(ErrorCode::ParseError, "--kind " + o.kind + " needs --space FILE");
  const Space s = auxiliary ? load_space(o.space, "auto", err) : load_space(o.input, o.kind, err);
  r.doc["space"] = space_json(s);
  r.doc["cellularity"] = to_json(s.poset, check_cellularity(s.poset));
  const std::string matching_file = o.kind == "matching" ? o.input : o.matching;
  const std::string function_file = o.kind == "function" ? o.input : o.function;
  if (!matching_file.empty()) {
    Options m = o;
    m.matching = matching_file;
    r.doc["matching"] = matching_summary(s.poset, load_matching(m, s.poset));
  }
  if (!function_file.empty()) {
    const auto values = load_function(function_file, s.poset);
    const MorseVerdict v = is_morse_function(s.poset, values);
    Json crit = Json::array();
    for (Element e : v.critical) crit.push_back(s.poset.name(e));
    r.doc["function"] = {{"morse", v.morse}, {"critical", std::move(crit)}};
  }
  return r;
}

Outcome cmd_homology(const Options& o, std::ostream& err) {
  Outcome r{report_document("homology")};
  const Space s = load_space(o.input, o.kind, err);
  r.doc["reduced"] = o.reduced;
  r.doc["coefficients"] = o.coeff;
  if (s.complex)
    r.doc["homology"] = to_json(homology(simplicial_chain_complex(*s.complex, o.reduced), coefficients(o)));
  else
    r.doc["homology"] = to_json(poset_homology(s.poset, o.reduced, coefficients(o)));
  return r;
}

Outcome cmd_cellular(const Options& o, std::ostream& err) {
  Outcome r{report_document("cellular")};
  const Space s = load_space(o.input, o.kind, err);
  const CellularityReport report = check_cellularity(s.poset);
  r.doc["cellularity"] = to_json(s.poset, report);
  const CellularComplex complex = cellular_chain_complex(s.poset, report);
  r.doc["cellular"] = to_json(complex);
  const HomologySummary cellular_h = homology(complex.chains(), coefficients(o));
  const HomologySummary order_h = poset_homology(s.poset, false, coefficients(o));
  r.doc["cellular_homology"] = to_json(cellular_h);
  r.doc["order_complex_homology"] = to_json(order_h);
  const bool iso = cellular_h == order_h;
  r.doc["cellular_isomorphism"] = iso;
  bool ok = iso;
  if (s.complex) {
    const bool gauge = gauge_equivalent(complex, face_poset_cellular_complex(*s.complex));
    r.doc["fast_path_gauge_equivalent"] = gauge;
    ok = ok && gauge;
  }
  r.code = ok ? exit_ok : exit_verdict_false;
  return r;
}

Outcome cmd_matching(const Options& o, std::ostream& err) {
  Outcome r{report_document("matching")};
  const Space s = load_space(o.input, o.kind, err);
  const Matching m = load_matching(o, s.poset);
  r.doc["matching"] = matching_summary(s.poset, m);
  r.doc["basic_sets"] = to_json(s.poset, basic_sets(s.poset, m));
  if (GradedPoset::from(s.poset)) {
    const MorseSmaleVerdict ms = morse_smale_orbits(s.poset, m);
    std::optional<AdmissiblePoset> admissible;
    try {
      admissible = AdmissiblePoset::verify(s.poset);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAdmissible) throw;
    }
    Json orbits = Json::array();
    for (const auto& orbit : ms.orbits) {
      Json j = to_json(s.poset, orbit);
      if (admissible) j["multiplicity"] = to_json(orbit_multiplicity(admissible->cellular(), orbit));
      orbits.push_back(std::move(j));
    }
    r.doc["orbits"] = std::move(orbits);
  }
  return r;
}

Outcome cmd_integrate(const Options& o, std::ostream& err) {
  Outcome r{report_document("integrate")};
  const Space s = load_space(o.input, o.kind, err);
  const MorseBottFunction f = integrate_matching(s.poset, load_matching(o, s.poset));
  Json values;
  for (Element e = 0; e < s.poset.size(); ++e) values[s.poset.name(e)] = format_rational(f(e));
  r.doc["values"] = std::move(values);
  r.raw = serialize_function(s.poset, f.values);
  return r;
}

MorseBottFunction function_for(const Options& o, const Poset& poset) {
  if (!o.function.empty()) {
    MorseBottFunction f;
    f.values = load_function(o.function, poset);
    if (!o.matching.empty()) f.matching = load_matching(o, poset);
    return f;
  }
  return integrate_matching(poset, load_matching(o, poset));
}

Outcome cmd_sweep(const Options& o, std::ostream& err) {
  Outcome r{report_document("sweep")};
  const Space s = load_space(o.input, o.kind, err);
  const MorseBottFunction f = function_for(o, s.poset);
  Json intervals = Json::array();
  bool all = true;
  for (const auto& check : filtration_sweep(s.poset, f)) {
    all = all && check.passed;
    intervals.push_back(to_json(s.poset, check));
  }
  r.doc["intervals"] = std::move(intervals);
  r.doc["holds"] = all;
  r.code = all ? exit_ok : exit_verdict_false;
  return r;
}

Outcome cmd_inequalities(const Options& o, std::ostream& err) {
  Outcome r{report_document("inequalities")};
  const Space s = load_space(o.input, o.kind, err);
  const AdmissiblePoset x = AdmissiblePoset::verify(s.poset);
  const InequalityReport report = inequality_report(x, load_matching(o, s.poset));
  r.doc["inequalities"] = to_json(report);
  r.code = report.holds() ? exit_ok : exit_verdict_false;
  return r;
}

Outcome cmd_hccat(const Options& o, std::ostream& err) {
  Outcome r{report_document("hccat")};
  const Space s = load_space(o.input, o.kind, err);
  const HomologySummary h = poset_homology(s.poset);
  const std::size_t value = hccat(h);
  r.doc["hccat"] = value;
  r.doc["homology"] = to_json(h);
  const CellularityReport report = check_cellularity(s.poset);
  const ChainComplex chains = report.is_cellular ? cellular_chain_complex(s.poset, report).chains()
                                                 : simplicial_chain_complex(order_complex(s.poset));
  const PitcherSubcomplex pitcher = pitcher_subcomplex(chains);
  r.doc["pitcher_source"] = report.is_cellular ? "cellular" : "order-complex";
  r.doc["pitcher"] = to_json(pitcher);
  std::size_t total = 0;
  for (auto k : pitcher.rank_profile) total += k;
  bool ok = pitcher.chain_map && pitcher.injective && pitcher.quasi_isomorphism && total == value;
  if (s.complex) {
    const bool consistent = hccat_face_poset_consistency(*s.complex);
    r.doc["face_poset_consistent"] = consistent;
    ok = ok && consistent;
  }
  r.code = ok ? exit_ok : exit_verdict_false;
  return r;
}

Outcome cmd_ls_check(const Options& o, std::ostream& err) {
  Outcome r{report_document("ls-check")};
  const Space s = load_space(o.input, o.kind, err);
  const AdmissiblePoset x = AdmissiblePoset::verify(s.poset);
  if (!o.function.empty()) {
    const CriticalPointBound c = critical_point_bound(x, load_function(o.function, s.poset));
    r.doc["morse_function"] = {{"hccat", c.hccat}, {"critical", c.critical}, {"holds", c.holds}};
    r.code = c.holds ? exit_ok : exit_verdict_false;
    return r;
  }
  const LsReport report = ls_bound_check(x, load_matching(o, s.poset));
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  r.doc["ls"] = to_json(report);
  r.code = report.holds() ? exit_ok : exit_verdict_false;
  return r;
}

Outcome cmd_gen(const Options& o, std::ostream& err) {
  Outcome r{report_document("gen")};
  Xorshift64Star rng(o.seed);
  r.doc["seed"] = o.seed;
  r.doc["kind"] = o.kind;
  if (o.kind == "poset") {
    r.raw = serialize_poset(random_graded_poset(rng, 12));
  } else if (o.kind == "simplicial") {
    const std::size_t vertices = 3 + rng.uniform(5);
    r.raw = serialize_simplicial_complex(random_complex(rng, vertices, 2, 2 + rng.uniform(6)));
  } else if (o.kind == "matching") {
    const Space s = load_space(o.space.empty() ? o.input : o.space, "auto", err);
    r.raw = serialize_matching(s.poset, random_matching(rng, s.poset));
  } else {
    throw Error(ErrorCode::ParseError, "gen supports --kind poset, simplicial or matching");
  }
  r.doc["content"] = *r.raw;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse-Bott theory on finite posets", "mbposet"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    Outcome (*run)(const Options&, std::ostream&);
  };
  const std::vector<Command> commands = {
      {"validate", "gradedness, cellularity and admissibility checks", cmd_validate},
      {"homology", "integer or rational homology", cmd_homology},
      {"cellular", "incidence numbers and the cellular homology comparison", cmd_cellular},
      {"matching", "basic sets, Morse and Morse-Smale verdicts, orbit multiplicities", cmd_matching},
      {"integrate", "Morse-Bott function integrating a matching", cmd_integrate},
      {"sweep", "collapse and attachment checks along the sublevel filtration", cmd_sweep},
      {"inequalities", "Morse-Bott and orbit inequalities", cmd_inequalities},
      {"hccat", "homological chain category and its minimal subcomplex", cmd_hccat},
      {"ls-check", "Lusternik-Schnirelmann bounds", cmd_ls_check},
      {"gen", "random graded poset, complex or matching", cmd_gen},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", o.input, "poset, complex, matching or function file");
    sub->add_option("--kind", o.kind, "kind of the --input file")
        ->check(CLI::IsMember({"poset", "simplicial", "matching", "function"}));
    sub->add_option("--space", o.space, "space file for --kind matching or function");
    sub->add_option("--coeff", o.coeff, "coefficients")->check(CLI::IsMember({"int", "rat"}));
    sub->add_flag("--reduced", o.reduced, "reduced homology");
    sub->add_option("--matching", o.matching, "matching file");
    sub->add_option("--function", o.function, "function file");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "doc"}));
    sub->add_option("--seed", o.seed, "generator seed");
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      if ((o.kind == "matching" || o.kind == "function") && std::string(commands[i].name) != "validate" &&
          std::string(commands[i].name) != "gen")
        throw Error(ErrorCode::ParseError, "--kind " + o.kind + " is only meaningful for validate and gen");
      Outcome r = commands[i].run(o, err);
      if (o.format == "doc") {
        out << r.doc.dump(2) << "\n";
      } else if (r.raw) {
        out << *r.raw;
      } else {
        Json view = r.doc;
        view.erase("schema_version");
        out << render_table(view);
      }
      return r.code;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      const bool bug = e.code() == ErrorCode::InconsistentIncidence || e.code() == ErrorCode::NonUnitIncidenceOnAdmissible;
      return bug ? exit_verdict_false : exit_input_error;
    }
  }
  return exit_input_error;
}

}  // namespace mbposet
