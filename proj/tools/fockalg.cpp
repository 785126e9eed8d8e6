// Command-line front end for the fockalg library.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockalg/analysis.hpp"
#include "fockalg/fixtures.hpp"
#include "fockalg/jordanwigner.hpp"
#include "fockalg/operators.hpp"
#include "fockalg/singlemode.hpp"
#include "fockalg/spec_io.hpp"

using namespace fockalg;

namespace {

constexpr int kExitSpec = 2;
constexpr int kExitCap = 3;
constexpr int kExitInconsistent = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string algebra_path;
  std::string sector;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t order = 2;
  std::string mode = "exact";
  std::string format = "json";
  std::size_t max_basis = 0;
  std::size_t max_n = 0;
  std::string kind = "number";
  Mode i = 1;
  Mode j = 0;
  std::string method = "solve";
  bool with_float = false;
};

SectorLimits limits_of(const RunConfig& cfg) {
  SectorLimits l = SectorLimits::from_environment();
  if (cfg.max_basis) l.max_basis = cfg.max_basis;
  if (cfg.max_n) l.max_particles = cfg.max_n;
  return l;
}

AlgebraSpec load_spec(const RunConfig& cfg) {
  if (cfg.algebra_path.empty()) throw UsageError("--algebra is required");
  AlgebraSpec spec = algebra_from_json(read_json_file(cfg.algebra_path));
  if (cfg.mode == "float") return spec.in_mode(ScalarMode::ComplexFloat);
  return spec;
}

Word load_sector(const RunConfig& cfg, const AlgebraSpec& spec) {
  if (cfg.sector.empty()) throw UsageError("--sector is required");
  Word w = parse_word(cfg.sector);
  if (w.empty()) throw UsageError("--sector is empty");
  for (Mode m : w)
    if (!spec.has_mode(m)) throw UsageError("sector mode " + std::to_string(m) + " is not a mode of the algebra");
  return sorted_multiset(w);
}

Json header(const RunConfig& cfg, const AlgebraSpec& spec) {
  return Json{{"command", cfg.command},
              {"algebra", algebra_to_json(spec)},
              {"mode", std::string(to_string(spec.scalar_mode()))}};
}

Json scalar_field(const Scalar& s, bool with_float) {
  if (!with_float || !s.is_exact()) return scalar_to_json(s);
  ComplexFloat f = s.to_complex();
  Json approx = f.imag() == 0.0 ? Json(f.real()) : Json{{"re", f.real()}, {"im", f.imag()}};
  return Json{{"exact", scalar_to_json(s)}, {"float", approx}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) line += ',';
    line += csv_field(fields[k]);
  }
  return line + "\n";
}

std::string word_text(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + std::to_string(w[k]);
  return s;
}

std::string float_text(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Splits CSV text back into cells, honouring quoted fields.
std::vector<std::vector<std::string>> csv_cells(const std::string& csv) {
  std::vector<std::vector<std::string>> rows(1);
  std::string cell;
  bool quoted = false;
  for (std::size_t k = 0; k < csv.size(); ++k) {
    char ch = csv[k];
    if (quoted) {
      if (ch == '"' && k + 1 < csv.size() && csv[k + 1] == '"') cell += csv[++k];
      else if (ch == '"') quoted = false;
      else cell += ch;
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      rows.back().push_back(std::move(cell));
      cell.clear();
    } else if (ch == '\n') {
      rows.back().push_back(std::move(cell));
      cell.clear();
      rows.emplace_back();
    } else {
      cell += ch;
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return rows;
}

std::string aligned_table(const std::string& csv) {
  auto rows = csv_cells(csv);
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], row[k].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      os << row[k];
      if (k + 1 < row.size()) os << std::string(width[k] - row[k].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

void emit(const RunConfig& cfg, const Json& report, const std::string& csv) {
  if (cfg.format == "csv") std::cout << csv;
  else if (cfg.format == "text") std::cout << aligned_table(csv);
  else std::cout << report.dump(2) << "\n";
}

int cmd_gram(const RunConfig& cfg) {
  AlgebraSpec spec = load_spec(cfg);
  Word ms = load_sector(cfg, spec);
  GramMatrix g = GramEngine(spec, limits_of(cfg)).matrix(ms);
  Json r = header(cfg, spec);
  r["sector"] = ms;
  Json basis = Json::array(), rows = Json::array();
  std::vector<std::string> head{"word"};
  for (const Word& w : g.sector.basis()) {
    basis.push_back(w);
    head.push_back(word_text(w));
  }
  std::string csv = csv_row(head);
  for (std::size_t a = 0; a < g.sector.size(); ++a) {
    Json row = Json::array();
    std::vector<std::string> line{word_text(g.sector[a])};
    for (std::size_t b = 0; b < g.sector.size(); ++b) {
      row.push_back(scalar_field(g.entries(a, b), cfg.with_float));
      line.push_back(g.entries(a, b).str());
    }
    rows.push_back(row);
    csv += csv_row(line);
  }
  r["basis"] = basis;
  r["matrix"] = rows;
  emit(cfg, r, csv);
  return 0;
}

int cmd_rank(const RunConfig& cfg) {
  AlgebraSpec spec = load_spec(cfg);
  Word ms = load_sector(cfg, spec);
  GramMatrix g = GramEngine(spec, limits_of(cfg)).matrix(ms);
  std::size_t rk = rank(g);
  Json r = header(cfg, spec);
  r["sector"] = ms;
  r["size"] = g.sector.size();
  r["rank"] = rk;
  emit(cfg, r, csv_row({"sector", "size", "rank"}) + csv_row({word_text(ms), std::to_string(g.sector.size()), std::to_string(rk)}));
  return 0;
}

int cmd_nullspace(const RunConfig& cfg) {
  AlgebraSpec spec = load_spec(cfg);
  Word ms = load_sector(cfg, spec);
  SectorLimits limits = limits_of(cfg);
  GramMatrix g = GramEngine(spec, limits).matrix(ms);
  NullBasis nb = null_space(g);
  NullConsistencyReport rep = check_null_consistency(spec, nb, limits);
  Json r = header(cfg, spec);
  r["sector"] = ms;
  r["dimension"] = nb.vectors.size();
  Json vecs = Json::array();
  std::string csv = csv_row({"vector", "word", "coeff"});
  for (std::size_t k = 0; k < nb.vectors.size(); ++k) {
    vecs.push_back(vector_to_json(nb.vectors[k]));
    for (const auto& [w, c] : nb.vectors[k].terms()) csv += csv_row({std::to_string(k), word_text(w), c.str()});
  }
  r["vectors"] = vecs;
  Json viol = Json::array();
  for (const auto& v : rep.violations)
    viol.push_back({{"vector", v.vector_index}, {"mode", v.mode}, {"image", vector_to_json(v.image)}});
  r["consistency"] = {{"checks", rep.checks}, {"consistent", rep.consistent()}, {"violations", viol}};
  emit(cfg, r, csv);
  return 0;
}

int cmd_positivity(const RunConfig& cfg) {
  AlgebraSpec spec = load_spec(cfg);
  Word ms = load_sector(cfg, spec);
  GramMatrix g = GramEngine(spec, limits_of(cfg)).matrix(ms);
  PositivityCertificate p = positivity(g);
  Json r = header(cfg, spec);
  r["sector"] = ms;
  r["verdict"] = std::string(to_string(p.verdict));
  r["exact"] = p.exact;
  r["rank"] = p.rank;
  Json minors = Json::array();
  for (const Scalar& m : p.minors) minors.push_back(scalar_field(m, cfg.with_float));
  r["minors"] = minors;
  if (p.minor_index) r["minor_index"] = *p.minor_index;
  if (p.witness_word) r["witness_word"] = *p.witness_word;
  if (p.min_eigenvalue) r["min_eigenvalue"] = *p.min_eigenvalue;
  std::string csv = csv_row({"sector", "verdict", "exact", "rank"}) +
                    csv_row({word_text(ms), std::string(to_string(p.verdict)), p.exact ? "true" : "false",
                             std::to_string(p.rank)});
  emit(cfg, r, csv);
  return 0;
}

int cmd_count(const RunConfig& cfg) {
  AlgebraSpec spec = load_spec(cfg);
  std::size_t d = cfg.d ? cfg.d : spec.modes().size();
  if (cfg.n == 0) throw UsageError("--n is required");
  CountReport c = count_states(spec, d, cfg.n, limits_of(cfg));
  Json r = header(cfg, spec);
  r["d"] = c.d;
  r["n"] = c.n;
  r["total"] = c.total;
  Json sectors = Json::array();
  std::string csv = csv_row({"multiset", "size", "rank"});
  for (const auto& s : c.sectors) {
    sectors.push_back({{"multiset", s.multiset}, {"size", s.size}, {"rank", s.rank}});
    csv += csv_row({word_text(s.multiset), std::to_string(s.size), std::to_string(s.rank)});
  }
  csv += csv_row({"total", "", std::to_string(c.total)});
  r["sectors"] = sectors;
  emit(cfg, r, csv);
  return 0;
}

int cmd_numop(const RunConfig& cfg) {
  AlgebraSpec spec = load_spec(cfg);
  SectorLimits limits = limits_of(cfg);
  ExpansionKind kind = parse_expansion_kind(cfg.kind);
  Mode j = cfg.j ? cfg.j : cfg.i;
  std::vector<Mode> probe = spec.modes();
  if (cfg.d) {
    if (cfg.d > probe.size()) throw UsageError("--d exceeds the number of modes");
    probe.resize(cfg.d);
  }
  ExpansionCoefficients coeffs;
  if (cfg.method == "y") {
    if (kind != ExpansionKind::Number) throw UsageError("--method y only builds number operators");
    if (cfg.order < 1) throw UsageError("--order must be at least 1");
    coeffs = quon_number_operator(spec.restricted(probe.size()), cfg.i, cfg.order - 1);
  } else {
    coeffs = solve_expansion(spec, kind, cfg.i, j, cfg.order, probe, limits);
  }

  Json r = header(cfg, spec);
  r["kind"] = std::string(to_string(kind));
  r["i"] = cfg.i;
  r["j"] = j;
  r["order"] = cfg.order;
  r["method"] = cfg.method;
  r["probe_modes"] = probe;
  r["constant"] = scalar_field(coeffs.constant, cfg.with_float);
  Json terms = Json::object();
  std::string csv = csv_row({"creation", "annihilation", "coeff"});
  for (const NormalOrderedTerm& t : coeffs.term_list()) {
    terms[format_word(t.creation) + "|" + format_word(t.annihilation)] = scalar_field(t.coeff, cfg.with_float);
    csv += csv_row({word_text(t.creation), word_text(t.annihilation), t.coeff.str()});
  }
  r["terms"] = terms;
  Json sectors = Json::array();
  for (const auto& s : coeffs.sectors)
    sectors.push_back({{"multiset", s.multiset},
                       {"creation", s.creation},
                       {"rank_annihilation", s.rank_annihilation},
                       {"rank_creation", s.rank_creation},
                       {"free_dimension", s.free_dimension}});
  r["sectors"] = sectors;
  Json verify = Json::array();
  for (std::size_t n = 1; n <= cfg.order; ++n) {
    ActionReport a = verify_operator_action(spec, coeffs, n, limits);
    verify.push_back({{"n", n}, {"checks", a.checks}, {"max_residual", a.max_residual}, {"exact_zero", a.exact_zero()}});
  }
  r["verification"] = verify;
  emit(cfg, r, csv);
  return 0;
}

int cmd_single(const RunConfig& cfg) {
  if (cfg.algebra_path.empty()) throw UsageError("--algebra is required");
  SingleModeAlgebra a = single_from_json(read_json_file(cfg.algebra_path));
  if (cfg.mode == "float")
    for (Scalar& v : a.phi) v = v.to_mode(ScalarMode::ComplexFloat);
  Representation rep = classify_representation(a.phi);
  std::size_t limit = a.phi.size() - 1;
  if (const auto* deg = std::get_if<Degenerate>(&rep)) limit = deg->n0;
  Sequence prefix(a.phi.begin(), a.phi.begin() + static_cast<std::ptrdiff_t>(limit + 1));
  Sequence c = limit >= 1 ? c_from_phi(prefix) : Sequence{};
  Sequence d = d_from_phi(a.phi);

  Json r{{"command", cfg.command}, {"spec", {{"n_max", a.n_max}}}};
  Json phi_json = Json::array();
  for (const Scalar& v : a.phi) phi_json.push_back(scalar_to_json(v));
  r["spec"]["phi"] = phi_json;
  r["mode"] = std::string(to_string(a.phi.back().mode()));
  if (const auto* deg = std::get_if<Degenerate>(&rep)) r["representation"] = {{"type", "degenerate"}, {"n0", deg->n0}};
  else r["representation"] = {{"type", "infinite-tower"}};

  auto cell = [](const Sequence& s, std::size_t n) { return n < s.size() ? s[n].str() : std::string(); };
  auto fcell = [](const Sequence& s, std::size_t n) {
    return n < s.size() ? float_text(s[n].to_complex().real()) : std::string();
  };
  std::string csv = csv_row({"n", "phi", "phi_float", "c", "c_float", "d", "d_float", "norm"});
  Json rows = Json::array();
  for (std::size_t n = 0; n < a.phi.size(); ++n) {
    std::string norm = n >= 1 ? float_text(annihilator_element(a.phi, n)) : "";
    csv += csv_row({std::to_string(n), cell(a.phi, n), fcell(a.phi, n), cell(c, n), fcell(c, n),
                    n >= 1 ? cell(d, n) : "", n >= 1 ? fcell(d, n) : "", norm});
    Json row{{"n", n}, {"phi", scalar_field(a.phi[n], cfg.with_float)}};
    if (n < c.size()) row["c"] = scalar_field(c[n], cfg.with_float);
    if (n >= 1 && n < d.size()) row["d"] = scalar_field(d[n], cfg.with_float);
    if (n >= 1) row["norm"] = annihilator_element(a.phi, n);
    rows.push_back(row);
  }
  r["table"] = rows;
  emit(cfg, r, csv);
  return 0;
}

int cmd_jw(const RunConfig& cfg) {
  if (cfg.algebra_path.empty()) throw UsageError("--algebra is required");
  JWSpec s = jw_from_json(read_json_file(cfg.algebra_path));
  std::size_t max_total = cfg.n ? cfg.n : 3;
  Json r{{"command", cfg.command}, {"spec", jw_to_json(s)}, {"mode", "float"}};
  auto cjson = [](Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; };

  Json comm = Json::array();
  for (std::size_t i = 1; i <= s.d; ++i)
    for (std::size_t j = 1; j <= s.d; ++j) {
      if (i == j) continue;
      JWCommutation c = jw_commutation_data(s, i, j);
      comm.push_back({{"i", i}, {"j", j}, {"aa_phase", cjson(c.aa_phase)}, {"a_adag_phase", cjson(c.a_adag_phase)}});
    }
  r["commutation"] = comm;

  OccupationSpace space(s.d, max_total);
  Json states = Json::array();
  std::string csv = csv_row({"occupation", "norm"});
  for (std::size_t k = 0; k < space.size(); ++k) {
    const Occupation& n = space[k];
    bool fits = true;
    for (std::size_t i = 0; i < s.d; ++i) fits = fits && n[i] < s.phi[i].size();
    if (!fits) continue;
    double norm = jw_state_norm(s, n);
    Json elems = Json::array();
    for (std::size_t i = 1; i <= s.d; ++i)
      if (n[i - 1] > 0) elems.push_back({{"mode", i}, {"value", cjson(jw_matrix_element(s, i, n))}});
    states.push_back({{"occupation", n}, {"norm", norm}, {"matrix_elements", elems}});
    std::string occ;
    for (std::size_t i = 0; i < n.size(); ++i) occ += (i ? " " : "") + std::to_string(n[i]);
    csv += csv_row({occ, float_text(norm)});
  }
  r["states"] = states;
  emit(cfg, r, csv);
  return 0;
}

int cmd_paperfixtures(const RunConfig& cfg) {
  std::vector<FixtureResult> results = run_published_fixtures(limits_of(cfg));
  if (cfg.format == "text") {
    std::cout << format_fixture_report(results);
    return 0;
  }
  Json items = Json::array();
  std::string csv = csv_row({"status", "name", "parameters", "findings"});
  for (const auto& f : results) {
    items.push_back({{"status", std::string(to_string(f.status))},
                     {"name", f.name},
                     {"parameters", f.parameters},
                     {"findings", f.findings}});
    std::string joined;
    for (const auto& x : f.findings) joined += (joined.empty() ? "" : "; ") + x;
    csv += csv_row({std::string(to_string(f.status)), f.name, f.parameters, joined});
  }
  Json r{{"command", cfg.command}, {"mode", "exact"}, {"fixtures", items}};
  emit(cfg, r, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gram matrices, ranks and number operators for deformed oscillator algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--algebra", cfg.algebra_path, "Algebra spec JSON file");
  app.add_option("--sector", cfg.sector, "Sector multiset, e.g. 1,2,3");
  app.add_option("--d", cfg.d, "Number of modes");
  app.add_option("--n", cfg.n, "Particle number (jw: largest total occupation)");
  app.add_option("--order", cfg.order, "Truncation order of the expansion");
  app.add_option("--mode", cfg.mode, "Scalar mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--max-basis", cfg.max_basis, "Largest sector basis allowed");
  app.add_option("--max-n", cfg.max_n, "Largest particle number allowed");
  app.add_flag("--with-float", cfg.with_float, "Add float values next to exact ones");

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const std::vector<Cmd> cmds = {
      {"gram", "Gram matrix of a sector", cmd_gram},
      {"rank", "Rank of a sector Gram matrix", cmd_rank},
      {"nullspace", "Null vectors of a sector and their consistency", cmd_nullspace},
      {"positivity", "Positive semidefiniteness of a sector", cmd_positivity},
      {"count", "Number of independent n-particle states of d modes", cmd_count},
      {"numop", "Normal-ordered expansion of N_i, N_ij or a_i a+_j", cmd_numop},
      {"single", "Single-mode phi, c and d tables", cmd_single},
      {"jw", "Jordan-Wigner mapped algebra data", cmd_jw},
      {"paperfixtures", "Check every published matrix, rank and solution set", cmd_paperfixtures}};
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "numop") {
      sub->add_option("--kind", cfg.kind, "number, transition or gamma")
          ->check(CLI::IsMember({"number", "transition", "gamma"}));
      sub->add_option("--i", cfg.i, "First mode index");
      sub->add_option("--j", cfg.j, "Second mode index (defaults to i)");
      sub->add_option("--method", cfg.method, "solve, or y for quon Y operators")
          ->check(CLI::IsMember({"solve", "y"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (const Cmd& c : cmds)
    if (app.got_subcommand(c.name)) {
      cfg.command = c.name;
      try {
        return c.run(cfg);
      } catch (const SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
      } catch (const AlgebraError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
      } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
      } catch (const InconsistentSystemError& e) {
        std::cerr << "inconsistent system at state (" << format_word(e.state()) << "): " << e.what() << "\n";
        return kExitInconsistent;
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }
  return 1;
}
