#include "cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "toricdimer/toricdimer.hpp"

namespace toricdimer::cli {

using json::Json;

namespace {

// Raised for bad flag values that CLI11 cannot see (malformed lists and so on).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (!s.empty() && s.front() == '[') {
    try {
      const Json j = Json::parse(s);
      std::vector<std::int64_t> out;
      for (const Json& v : j) {
        if (!v.is_number_integer()) throw UsageError(std::string(what) + ": expected integers");
        out.push_back(v.get<std::int64_t>());
      }
      return out;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string(what) + ": " + e.what());
    }
  }
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError(std::string(what) + ": empty entry in '" + text + "'");
    const std::string tok = item.substr(b, e - b + 1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw UsageError(std::string(what) + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

Vec2 parse_pair(const std::string& text, const char* what) {
  const auto v = parse_int_list(text, what);
  if (v.size() != 2) throw UsageError(std::string(what) + ": expected two integers");
  return {v[0], v[1]};
}

Matching parse_matching(const std::string& text, const char* what) {
  std::vector<int> ids;
  for (std::int64_t v : parse_int_list(text, what)) ids.push_back(static_cast<int>(v));
  return make_matching(std::move(ids));
}

TorusGraph load_graph(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return json::graph_from_string(buf.str());
}

TorusGraph load_valid_graph(const std::string& path) {
  TorusGraph g = load_graph(path);
  require_valid(g);
  return g;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }
std::string emit(const json::OrderedJson& j) { return j.dump(2) + "\n"; }

Json matchings_json(const TorusGraph& g, const std::vector<Matching>& ms) {
  Json arr = Json::array();
  for (const Matching& m : ms)
    arr.push_back({{"edges", json::matching_to_json(m)}, {"phi", json::vec_to_json(homology_exponent(g, m))}});
  return arr;
}

// Subcommand bodies. Each fills `res` and returns.

void cmd_graph_check(const std::string& file, CommandResult& res) {
  const TorusGraph g = load_graph(file);
  const ValidationReport report = validate_graph(g);
  Json out{{"validation", json::validation_to_json(report)}};
  out["faces"] = (report.valid && report.rotation_valid) ? json::faces_to_json(compute_faces(g)) : Json(nullptr);
  res.out = emit(out);
  if (!report.valid) {
    res.exit_code = kInvalidInput;
    res.err = "invalid graph: " + report.findings.front().message + "\n";
  }
}

void cmd_match_enum(const std::string& file, CommandResult& res) {
  const TorusGraph g = load_valid_graph(file);
  const auto ms = enumerate_matchings(g);
  Json out{{"count", ms.size()}, {"matchings", matchings_json(g, ms)}};
  if (const auto v = uncovered_vertex(g))
    out["uncovered_vertex"] = {{"color", v->color == Color::White ? "white" : "black"}, {"index", v->index}};
  res.out = emit(out);
}

void cmd_heights(const std::string& file, const std::string& base_ids, const std::string& match_ids,
                 const std::string& patch_dims, CommandResult& res) {
  const TorusGraph g = load_valid_graph(file);
  const Matching base = parse_matching(base_ids, "--base");
  const Matching m = parse_matching(match_ids, "--match");
  require_matching(g, base);
  require_matching(g, m);

  const auto x = patch_dims.find_first_of("xX");
  if (x == std::string::npos) throw UsageError("--patch: expected KxL");
  const auto k = parse_int_list(patch_dims.substr(0, x), "--patch");
  const auto l = parse_int_list(patch_dims.substr(x + 1), "--patch");
  if (k.size() != 1 || l.size() != 1 || k[0] < 1 || l[0] < 1 || k[0] * l[0] > 4096)
    throw UsageError("--patch: K and L must be positive with K*L <= 4096");

  const HomologyVector h = height_change(g, base, m);
  const TransitionCycles tc = transition_cycles(g, base, m);
  Json out{{"height_change", json::vec_to_json(h)}, {"transition", json::transition_to_json(tc)}};
  bool ok = tc.total_homology() == h;

  if (!is_zero(h)) {
    const DivideReport dr = check_divide_structure(tc);
    out["divide"] = json::divide_to_json(dr);
    ok = ok && dr.pass;
  } else {
    out["divide"] = nullptr;
  }

  const PlanarPatch patch = lift_block(g, static_cast<int>(k[0]), static_cast<int>(l[0]));
  try {
    const HeightField field = height_function(patch, base, m);
    const PeriodReport pr = period_increments(field);
    out["heights"] = json::height_field_to_json(field);
    out["periods"] = {{"dx", pr.dx_values}, {"dy", pr.dy_values}, {"periodic", pr.periodic()}};
    ok = ok && pr.periodic();
    if (k[0] >= 2 && l[0] >= 2) {
      const HomologyVector t = tilde_height_change(patch, base, m);
      out["tilde_height_change"] = json::vec_to_json(t);
      out["tilde_is_rotation"] = t == rot90(h);
      ok = ok && t == rot90(h);
    } else {
      out["tilde_height_change"] = nullptr;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::InconsistentHeights) throw;
    res.err += std::string("inconsistent heights: ") + e.what() + "\n";
    ok = false;
  }
  out["pass"] = ok;
  res.out = emit(out);
  if (!ok) res.exit_code = kVerificationFailure;
}

void cmd_operator(const std::string& file, bool four_eval, bool verify, CommandResult& res) {
  const TorusGraph g = load_valid_graph(file);
  const KasteleynSigning s = kasteleyn_signing(g);
  const LaurentPoly2 p = kasteleyn_polynomial(g, s);
  Json out{{"signs", s.sign}, {"polynomial", json::poly_to_json(p)}};

  if (four_eval || verify) {
    const auto ms = enumerate_matchings(g);
    std::map<Vec2, std::int64_t> counts;
    for (const Matching& m : ms) ++counts[homology_exponent(g, m)];
    out["matching_count"] = ms.size();
    if (verify) {
      bool ok = true;
      Json mismatches = Json::array();
      std::set<Vec2> support;
      for (const auto& [e, c] : p.terms()) support.insert(e);
      for (const auto& [e, c] : counts) support.insert(e);
      for (Vec2 e : support) {
        const BigInt coef = abs(p.coefficient(e));
        const auto it = counts.find(e);
        const std::int64_t n = it == counts.end() ? 0 : it->second;
        if (coef != n) {
          ok = false;
          mismatches.push_back({{"exponent", json::vec_to_json(e)},
                                {"coefficient", json::bigint_to_json(p.coefficient(e))},
                                {"count", n}});
        }
      }
      out["coefficient_mismatches"] = std::move(mismatches);
      out["coefficients_match_counts"] = ok;
      if (!ok) res.exit_code = kVerificationFailure;
    }
    if (four_eval) {
      try {
        out["four_evaluations"] = json::four_eval_to_json(count_from_four_evaluations(p, BigInt(ms.size())));
      } catch (const Error& e) {
        if (e.code() != Errc::NoPatternFound) throw;
        out["four_evaluations"] = nullptr;
        res.err += std::string(e.what()) + "\n";
        res.exit_code = kVerificationFailure;
      }
    }
  }
  res.out = emit(out);
}

void cmd_newton(const std::string& file, const std::string& base_ids, CommandResult& res) {
  const TorusGraph g = load_valid_graph(file);
  const NewtonReport r = base_ids.empty() ? full_support_report(g)
                                          : full_support_report(g, parse_matching(base_ids, "--base"));
  res.out = emit(json::newton_to_json(r));
  if (!r.full_support) res.exit_code = kVerificationFailure;
}

void cmd_bnr(int n, int r, const std::string& realize, bool full_support, CommandResult& res) {
  if (full_support) {
    if (n > kBnrEnumerationLimit)
      throw Error(Errc::BadParameters, "--full-support enumerates matchings; n must be at most " +
                                           std::to_string(kBnrEnumerationLimit));
    const BnrSupportReport rep = bnr_full_support(n, r);
    res.out = emit(json::bnr_support_to_json(rep));
    if (!rep.pass) res.exit_code = kVerificationFailure;
    return;
  }
  if (!realize.empty()) {
    const Realization real = realize_height_change(n, r, parse_pair(realize, "--realize"));
    res.out = emit(json::realization_to_json(real));
    return;
  }
  res.out = emit(json::graph_to_json(build_bnr(n, r).graph));
}

std::optional<HamiltonMethod> parse_method(const std::string& s) {
  for (HamiltonMethod m :
       {HamiltonMethod::Rankin, HamiltonMethod::Visibility, HamiltonMethod::BruteForce, HamiltonMethod::CrossCheck})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

void cmd_circulant_ham(std::int64_t n, std::int64_t a, std::int64_t b, const std::string& method,
                       CommandResult& res) {
  const auto m = parse_method(method);
  if (!m) throw UsageError("--method must be one of rankin, visibility, brute, cross");
  const CirculantDigraph c = CirculantDigraph::make(n, a, b);
  const HamiltonResult hr = is_hamiltonian(c, *m);
  res.out = emit(json::hamilton_to_json(hr));
  if (!hr.methods_agree || (hr.cycle && !is_hamiltonian_cycle(c, *hr.cycle))) res.exit_code = kVerificationFailure;
}

void cmd_circulant_path(std::int64_t n, std::int64_t a, std::int64_t b, const std::string& target,
                        CommandResult& res) {
  const CirculantDigraph c = CirculantDigraph::make(n, a, b);
  const LatticeBasis lattice = circuit_lattice(n, a, b);
  const LatticePath path = build_lattice_path(lattice, parse_pair(target, "--target"));
  Json out{{"lattice", {lattice.h11(), lattice.h21(), lattice.h22()}},
           {"path", json::lattice_path_to_json(path)},
           {"circuit", path_to_circuit(c, path)}};
  res.out = emit(out);
}

void cmd_honeycomb(const std::string& matrix, bool verify, CommandResult& res) {
  const auto v = parse_int_list(matrix, "--matrix");
  if (v.size() != 4) throw UsageError("--matrix: expected B11,B12,B21,B22");
  const HoneycombQuotient hq = build_honeycomb(Mat2{v[0], v[1], v[2], v[3]});
  if (!verify) {
    res.out = emit(json::graph_to_json(hq.graph));
    return;
  }
  const CheckReport check = lozenge_convex_combination_check(hq);
  const NewtonReport newton = full_support_report(hq.graph, hq.omega_z);
  Json mappings = Json::array();
  static const std::array<Vec2, 3> kAbsoluteTriple{{{1, 9}, {-11, -3}, {10, -6}}};
  for (const TripleMapping& tm : absolute_triple_mapping(check, kAbsoluteTriple))
    mappings.push_back(json::triple_mapping_to_json(tm));
  Json out{{"lozenge_check", json::lozenge_check_to_json(check)},
           {"newton", json::newton_to_json(newton)},
           {"triple_mappings", std::move(mappings)},
           {"pass", check.all_pass && newton.full_support}};
  res.out = emit(out);
  if (!(check.all_pass && newton.full_support)) res.exit_code = kVerificationFailure;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::SigningMismatch:
    case Errc::NoPatternFound:
    case Errc::InconsistentHeights:
      return kVerificationFailure;
    default:
      return kInvalidInput;
  }
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult res;
  CLI::App app{"Exact dimer computations on bipartite torus graphs", "toricdimer"};
  app.require_subcommand(1);

  std::string file, base_ids, match_ids, patch = "2x2", realize, target, method = "cross", matrix;
  bool four_eval = false, verify = false, full_support = false;
  int bn = 0, br = 0;
  std::int64_t cn = 0, ca = 0, cb = 0;

  auto* graph = app.add_subcommand("graph", "Graph files");
  graph->require_subcommand(1);
  auto* graph_check = graph->add_subcommand("check", "Validate a graph and trace its faces");
  graph_check->add_option("FILE", file, "graph JSON, or - for stdin")->required();

  auto* match = app.add_subcommand("match", "Perfect matchings");
  match->require_subcommand(1);
  auto* match_enum = match->add_subcommand("enum", "Enumerate every perfect matching");
  match_enum->add_option("FILE", file)->required();

  auto* heights = app.add_subcommand("heights", "Height change, transition cycles and heights on a patch");
  heights->add_option("FILE", file)->required();
  heights->add_option("--base", base_ids, "edge ids, e.g. 0,3,6 or [0,3,6]")->required();
  heights->add_option("--match", match_ids, "edge ids")->required();
  heights->add_option("--patch", patch, "block size KxL")->capture_default_str();

  auto* op = app.add_subcommand("operator", "Kasteleyn signing and determinant");
  op->add_option("FILE", file)->required();
  op->add_flag("--four-eval", four_eval, "recover the matching count from P(+-1, +-1)");
  op->add_flag("--verify", verify, "compare |coefficients| with enumerated counts");

  auto* newton = app.add_subcommand("newton", "Newton polygon and realized height changes");
  newton->add_option("FILE", file)->required();
  newton->add_option("--base", base_ids, "reference matching (default: first enumerated)");

  auto* bnr = app.add_subcommand("bnr", "The B(n, r) family");
  bnr->add_option("--n", bn)->required();
  bnr->add_option("--r", br)->required();
  auto* realize_opt = bnr->add_option("--realize", realize, "height change X,Y to realize");
  auto* support_flag = bnr->add_flag("--full-support", full_support, "enumerate and compare with the triangle");
  realize_opt->excludes(support_flag);

  auto* circ = app.add_subcommand("circulant", "Circulant digraphs C(n; a, b)");
  circ->require_subcommand(1);
  auto* ham = circ->add_subcommand("ham", "Hamiltonicity");
  auto* path = circ->add_subcommand("path", "Lattice path and the circuit it traces");
  for (auto* sc : {ham, path}) {
    sc->add_option("--n", cn)->required();
    sc->add_option("--a", ca)->required();
    sc->add_option("--b", cb)->required();
  }
  ham->add_option("--method", method, "rankin, visibility, brute or cross")->capture_default_str();
  path->add_option("--target", target, "lattice point U,V")->required();

  auto* honey = app.add_subcommand("honeycomb", "Honeycomb quotient by a period matrix");
  honey->add_option("--matrix", matrix, "B11,B12,B21,B22")->required();
  honey->add_flag("--verify", verify, "lozenge identity, full support, triple mapping report");

  std::vector<std::string> argv_store{"toricdimer"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? kOk : kUsage;
    return res;
  }

  try {
    if (graph_check->parsed()) cmd_graph_check(file, res);
    else if (match_enum->parsed()) cmd_match_enum(file, res);
    else if (heights->parsed()) cmd_heights(file, base_ids, match_ids, patch, res);
    else if (op->parsed()) cmd_operator(file, four_eval, verify, res);
    else if (newton->parsed()) cmd_newton(file, base_ids, res);
    else if (bnr->parsed()) cmd_bnr(bn, br, realize, full_support, res);
    else if (ham->parsed()) cmd_circulant_ham(cn, ca, cb, method, res);
    else if (path->parsed()) cmd_circulant_path(cn, ca, cb, target, res);
    else if (honey->parsed()) cmd_honeycomb(matrix, verify, res);
  } catch (const UsageError& e) {
    res.exit_code = kUsage;
    res.err += std::string("usage: ") + e.what() + "\n";
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.code());
    res.err += std::string(to_string(e.code())) + ": " + e.what() + "\n";
  }
  return res;
}

}  // namespace toricdimer::cli
