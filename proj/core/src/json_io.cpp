#include "toricdimer/json_io.hpp"

#include <limits>

#include "toricdimer/error.hpp"

namespace toricdimer::json {

namespace {

template <class J>
J int_pair(Vec2 v) {
  return J::array({v.x, v.y});
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::vector<int>> cyclic_orders(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const Json& row : j) {
    if (!row.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array of arrays");
    std::vector<int> cyc;
    for (const Json& e : row) cyc.push_back(static_cast<int>(as_int(e, "edge id")));
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

OrderedJson graph_to_json(const TorusGraph& g) {
  OrderedJson j;
  j["num_white"] = g.num_white();
  j["num_black"] = g.num_black();
  OrderedJson edges = OrderedJson::array();
  for (const Edge& e : g.edges()) edges.push_back({e.white, e.black, e.offset.x, e.offset.y});
  j["edges"] = std::move(edges);
  if (g.has_rotation()) {
    OrderedJson rot;
    rot["white"] = g.rotation()->white;
    rot["black"] = g.rotation()->black;
    j["rotation"] = std::move(rot);
  }
  return j;
}

std::string graph_to_string(const TorusGraph& g) { return graph_to_json(g).dump(); }

TorusGraph graph_from_json(const Json& j) {
  const auto nw = static_cast<int>(as_int(field(j, "num_white"), "num_white"));
  const auto nb = static_cast<int>(as_int(field(j, "num_black"), "num_black"));
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) throw Error(Errc::ParseError, "edges must be an array");
  std::vector<Edge> edges;
  for (const Json& e : ej) {
    if (!e.is_array() || e.size() != 4) throw Error(Errc::ParseError, "each edge must be [w, b, dx, dy]");
    edges.push_back({static_cast<int>(as_int(e[0], "white")), static_cast<int>(as_int(e[1], "black")),
                     {as_int(e[2], "dx"), as_int(e[3], "dy")}});
  }
  std::optional<RotationSystem> rot;
  if (j.contains("rotation") && !j.at("rotation").is_null()) {
    const Json& rj = j.at("rotation");
    rot = RotationSystem{cyclic_orders(field(rj, "white"), "rotation.white"),
                         cyclic_orders(field(rj, "black"), "rotation.black")};
  }
  return TorusGraph(nw, nb, std::move(edges), std::move(rot));
}

TorusGraph graph_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return graph_from_json(j);
}

Json matching_to_json(const Matching& m) { return m.edge_ids; }

Matching matching_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "a matching is a JSON array of edge ids");
  std::vector<int> ids;
  for (const Json& e : j) ids.push_back(static_cast<int>(as_int(e, "edge id")));
  return make_matching(std::move(ids));
}

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json vec_to_json(Vec2 v) { return int_pair<Json>(v); }

Json validation_to_json(const ValidationReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back({{"kind", f.kind}, {"message", f.message}});
  return {{"valid", r.valid},
          {"balanced", r.balanced},
          {"rotation_present", r.rotation_present},
          {"rotation_valid", r.rotation_valid},
          {"findings", std::move(findings)}};
}

Json faces_to_json(const FaceSet& fs) {
  Json faces = Json::array();
  for (const auto& f : fs.faces) faces.push_back({{"darts", f}, {"length", f.size()}});
  return {{"faces", std::move(faces)},
          {"num_faces", fs.num_faces()},
          {"euler_characteristic", fs.euler_characteristic},
          {"cellular", fs.cellular}};
}

Json transition_to_json(const TransitionCycles& tc) {
  Json circuits = Json::array();
  for (const Circuit& c : tc.circuits) {
    circuits.push_back({{"whites", c.whites},
                        {"blacks", c.blacks},
                        {"forward_edges", c.forward_edges},
                        {"reversed_edges", c.reversed_edges},
                        {"homology", vec_to_json(c.homology)}});
  }
  return {{"circuits", std::move(circuits)},
          {"discarded_pairs", tc.discarded_pairs},
          {"total_homology", vec_to_json(tc.total_homology())}};
}

Json divide_to_json(const DivideReport& r) {
  return {{"total", vec_to_json(r.total)}, {"d", r.d},          {"unit", vec_to_json(r.unit)},
          {"positive", r.positive},        {"negative", r.negative}, {"zero", r.zero},
          {"other", r.other},              {"pass", r.pass}};
}

Json height_field_to_json(const HeightField& f) {
  Json faces = Json::array();
  for (std::size_t i = 0; i < f.faces.size(); ++i) {
    faces.push_back({{"face", f.faces[i].face},
                     {"cell", vec_to_json(f.faces[i].cell)},
                     {"height", f.height[i] ? Json(*f.height[i]) : Json(nullptr)}});
  }
  return {{"base_face", f.base_face}, {"faces", std::move(faces)}};
}

Json poly_to_json(const LaurentPoly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"i", e.x}, {"j", e.y}, {"c", bigint_to_json(c)}});
  return {{"terms", std::move(terms)}};
}

LaurentPoly2 poly_from_json(const Json& j) {
  LaurentPoly2 p;
  for (const Json& t : field(j, "terms")) {
    const Json& c = field(t, "c");
    const BigInt coef = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(as_int(c, "c"));
    p.add_term({as_int(field(t, "i"), "i"), as_int(field(t, "j"), "j")}, coef);
  }
  return p;
}

Json four_eval_to_json(const FourEvaluation& fe) {
  Json values = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    values.push_back({{"point", {kSignPoints[k][0], kSignPoints[k][1]}}, {"value", bigint_to_json(fe.values[k])}});
  }
  return {{"evaluations", std::move(values)}, {"patterns", fe.patterns}, {"count", bigint_to_json(fe.count)}};
}

Json newton_to_json(const NewtonReport& r) {
  Json hull = Json::array(), pts = Json::array(), missing = Json::array(), realized = Json::array();
  for (Vec2 v : r.polygon.vertices) hull.push_back(vec_to_json(v));
  for (Vec2 v : r.lattice_points) pts.push_back(vec_to_json(v));
  for (Vec2 v : r.missing) missing.push_back(vec_to_json(v));
  for (const auto& [v, n] : r.realized) realized.push_back({vec_to_json(v), n});
  return {{"hull", std::move(hull)},
          {"lattice_points", std::move(pts)},
          {"realized", std::move(realized)},
          {"missing", std::move(missing)},
          {"full_support", r.full_support}};
}

Json lattice_path_to_json(const LatticePath& p) {
  Json pts = Json::array();
  for (Vec2 v : p.points) pts.push_back(vec_to_json(v));
  return pts;
}

Json hamilton_to_json(const HamiltonResult& r) {
  Json verdicts = Json::object();
  for (const auto& [m, v] : r.verdicts) verdicts[std::string(to_string(m))] = v;
  Json j{{"hamiltonian", r.hamiltonian}, {"methods", std::move(verdicts)}, {"methods_agree", r.methods_agree}};
  j["cycle"] = r.cycle ? Json(*r.cycle) : Json(nullptr);
  j["rankin_witness"] = r.rankin_witness ? Json::array({r.rankin_witness->first, r.rankin_witness->second})
                                         : Json(nullptr);
  j["diagonal_point"] = r.diagonal_point ? vec_to_json(*r.diagonal_point) : Json(nullptr);
  return j;
}

Json realization_to_json(const Realization& r) {
  Json j{{"matching", matching_to_json(r.matching)},
         {"constructive", r.constructive},
         {"abelianized", vec_to_json(r.abelianized)},
         {"circuit", r.circuit}};
  j["path"] = r.path ? lattice_path_to_json(*r.path) : Json(nullptr);
  return j;
}

Json bnr_support_to_json(const BnrSupportReport& r) {
  Json tri = Json::array(), vis = Json::array(), fails = Json::array();
  for (Vec2 v : r.triangle_points) tri.push_back(vec_to_json(v));
  for (Vec2 v : r.visible_points) vis.push_back(vec_to_json(v));
  for (Vec2 v : r.constructive_failures) fails.push_back(vec_to_json(v));
  Json j = newton_to_json(r.newton);
  j["n"] = r.n;
  j["r"] = r.r;
  j["matching_count"] = r.matching_count;
  j["triangle_points"] = std::move(tri);
  j["matches_triangle"] = r.matches_triangle;
  j["visible_points"] = std::move(vis);
  j["constructive_failures"] = std::move(fails);
  j["pass"] = r.pass;
  return j;
}

Json lozenge_check_to_json(const CheckReport& r) {
  Json verdicts = Json::array();
  for (const LozengeVerdict& v : r.verdicts) {
    verdicts.push_back({{"matching", v.matching_index},
                        {"counts", v.counts},
                        {"height", vec_to_json(v.height)},
                        {"pass", v.pass}});
  }
  return {{"volume", r.volume},
          {"h_x", vec_to_json(r.h_x)},
          {"h_y", vec_to_json(r.h_y)},
          {"verdicts", std::move(verdicts)},
          {"all_pass", r.all_pass}};
}

Json triple_mapping_to_json(const TripleMapping& m) {
  return {{"assignment", m.assignment},
          {"numerators", m.numerators},
          {"denominator", m.denominator},
          {"integral", m.integral},
          {"unimodular", m.unimodular}};
}

}  // namespace toricdimer::json
