#include "toricdimer/torus_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "toricdimer/error.hpp"

namespace toricdimer {

TorusGraph::TorusGraph(int num_white, int num_black, std::vector<Edge> edges,
                       std::optional<RotationSystem> rotation)
    : num_white_(num_white),
      num_black_(num_black),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)),
      white_adj_(static_cast<std::size_t>(std::max(num_white, 0))),
      black_adj_(static_cast<std::size_t>(std::max(num_black, 0))) {
  for (int e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (ed.white < 0 || ed.white >= num_white_ || ed.black < 0 || ed.black >= num_black_) continue;
    white_adj_[static_cast<std::size_t>(ed.white)].push_back(e);
    black_adj_[static_cast<std::size_t>(ed.black)].push_back(e);
  }
}

TorusGraph TorusGraph::with_rotation(std::optional<RotationSystem> rotation) const {
  return TorusGraph(num_white_, num_black_, edges_, std::move(rotation));
}

namespace {

void check_rotation_side(const TorusGraph& g, const std::vector<std::vector<int>>& orders,
                         Color color, ValidationReport& report) {
  const int count = color == Color::White ? g.num_white() : g.num_black();
  const char* name = color == Color::White ? "white" : "black";
  if (static_cast<int>(orders.size()) != count) {
    std::ostringstream os;
    os << "rotation has " << orders.size() << " " << name << " lists, expected " << count;
    report.findings.push_back({"rotation_shape", os.str()});
    report.rotation_valid = false;
    return;
  }
  std::vector<int> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (int v = 0; v < count; ++v) {
    for (int e : orders[static_cast<std::size_t>(v)]) {
      if (e < 0 || e >= g.num_edges()) {
        std::ostringstream os;
        os << name << " vertex " << v << " lists unknown edge " << e;
        report.findings.push_back({"rotation_permutation", os.str()});
        report.rotation_valid = false;
        continue;
      }
      const Edge& ed = g.edge(e);
      const int endpoint = color == Color::White ? ed.white : ed.black;
      if (endpoint != v) {
        std::ostringstream os;
        os << name << " vertex " << v << " lists edge " << e << " which is not incident";
        report.findings.push_back({"rotation_permutation", os.str()});
        report.rotation_valid = false;
      }
      ++seen[static_cast<std::size_t>(e)];
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (seen[static_cast<std::size_t>(e)] != 1) {
      std::ostringstream os;
      os << "edge " << e << " appears " << seen[static_cast<std::size_t>(e)] << " times in " << name
         << " rotation";
      report.findings.push_back({"rotation_permutation", os.str()});
      report.rotation_valid = false;
    }
  }
}

}  // namespace

ValidationReport validate_graph(const TorusGraph& g) {
  ValidationReport report;
  if (g.num_white() < 0 || g.num_black() < 0) {
    report.findings.push_back({"negative_count", "vertex counts must be non-negative"});
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.white < 0 || ed.white >= g.num_white()) {
      std::ostringstream os;
      os << "edge " << e << " references white " << ed.white << " (num_white = " << g.num_white() << ")";
      report.findings.push_back({"edge_out_of_range", os.str()});
    }
    if (ed.black < 0 || ed.black >= g.num_black()) {
      std::ostringstream os;
      os << "edge " << e << " references black " << ed.black << " (num_black = " << g.num_black() << ")";
      report.findings.push_back({"edge_out_of_range", os.str()});
    }
  }
  const bool edges_ok = report.findings.empty();
  report.rotation_present = g.has_rotation();
  if (g.has_rotation() && edges_ok) {
    report.rotation_valid = true;
    check_rotation_side(g, g.rotation()->white, Color::White, report);
    check_rotation_side(g, g.rotation()->black, Color::Black, report);
  }
  report.balanced = g.num_white() == g.num_black();
  report.valid = report.findings.empty();
  return report;
}

void require_valid(const TorusGraph& g) {
  const ValidationReport r = validate_graph(g);
  if (!r.valid) throw Error(Errc::InvalidGraph, r.findings.front().message);
}

Vec2 dart_offset(const TorusGraph& g, int dart) {
  const Vec2 off = g.edge(dart_edge(dart)).offset;
  return dart_from_white(dart) ? off : -off;
}

FaceSet compute_faces(const TorusGraph& g) {
  if (!g.has_rotation()) throw Error(Errc::MissingRotation, "face tracing needs a rotation system");
  const ValidationReport report = validate_graph(g);
  if (!report.rotation_valid) throw Error(Errc::InvalidGraph, report.findings.front().message);

  const RotationSystem& rot = *g.rotation();
  const auto num_darts = static_cast<std::size_t>(2 * g.num_edges());

  // successor[d] = counterclockwise successor of dart d around its origin
  std::vector<int> successor(num_darts, -1);
  auto link = [&](const std::vector<std::vector<int>>& orders, bool white) {
    for (const auto& cyc : orders) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int here = dart_of(cyc[i], white);
        const int next = dart_of(cyc[(i + 1) % cyc.size()], white);
        successor[static_cast<std::size_t>(here)] = next;
      }
    }
  };
  link(rot.white, true);
  link(rot.black, false);

  FaceSet fs;
  fs.face_of_dart.assign(num_darts, -1);
  for (std::size_t start = 0; start < num_darts; ++start) {
    if (fs.face_of_dart[start] != -1) continue;
    const int id = fs.num_faces();
    std::vector<int> face;
    int d = static_cast<int>(start);
    while (fs.face_of_dart[static_cast<std::size_t>(d)] == -1) {
      fs.face_of_dart[static_cast<std::size_t>(d)] = id;
      face.push_back(d);
      d = successor[static_cast<std::size_t>(dart_twin(d))];
    }
    if (d != static_cast<int>(start)) {
      throw Error(Errc::InvalidGraph, "face tracing did not close; rotation is not a permutation");
    }
    fs.faces.push_back(std::move(face));
  }
  fs.euler_characteristic = g.num_vertices() - g.num_edges() + fs.num_faces();
  fs.cellular = fs.euler_characteristic == 0;
  return fs;
}

int PlanarPatch::face_index(PatchFace f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || *it != f) return -1;
  return static_cast<int>(it - faces.begin());
}

int PlanarPatch::vertex_index(Color c, int index, Vec2 cell) const {
  if (!in_block(cell)) return -1;
  const int per_cell = graph.num_vertices();
  const auto cell_id = static_cast<int>(cell.y * k + cell.x);
  return cell_id * per_cell + (c == Color::White ? index : graph.num_white() + index);
}

namespace {

// Fills face_prefix and dart_position. False when some face winds around the torus.
bool face_geometry(PlanarPatch& patch) {
  const FaceSet& fs = *patch.base_faces;
  patch.face_prefix.assign(fs.faces.size(), {});
  patch.dart_position.assign(fs.face_of_dart.size(), -1);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    Vec2 acc;
    for (std::size_t p = 0; p < fs.faces[f].size(); ++p) {
      const int d = fs.faces[f][p];
      patch.face_prefix[f].push_back(acc);
      patch.dart_position[static_cast<std::size_t>(d)] = static_cast<int>(p);
      acc += dart_offset(patch.graph, d);
    }
    if (!is_zero(acc)) {
      patch.face_prefix.clear();
      patch.dart_position.clear();
      return false;
    }
  }
  return true;
}

// Breadth-first search over lifted faces whose cell lies within `margin` of
// the block, widening the margin until every block face is reached, then
// pruned to the paths leading to block faces.
void build_dual_tree(PlanarPatch& patch) {
  std::int64_t reach = 0;
  for (const Edge& e : patch.graph.edges())
    reach = std::max({reach, e.offset.x < 0 ? -e.offset.x : e.offset.x, e.offset.y < 0 ? -e.offset.y : e.offset.y});
  for (const auto& pre : patch.face_prefix)
    for (Vec2 v : pre) reach = std::max({reach, v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y});

  for (std::int64_t margin = reach + 1;; margin *= 2) {
    if (margin > (std::int64_t{1} << 20)) throw Error(Errc::Inconsistent, "dual graph of the cover is not connected");
    auto in_region = [&](Vec2 c) {
      return c.x >= -margin && c.x < patch.k + margin && c.y >= -margin && c.y < patch.l + margin;
    };
    std::vector<PlanarPatch::DualStep> tree{{patch.faces.front(), -1, -1}};
    std::map<PatchFace, int> seen{{patch.faces.front(), 0}};
    std::size_t block_found = 1;
    for (std::size_t i = 0; i < tree.size() && block_found < patch.faces.size(); ++i) {
      const PatchFace here = tree[i].face;
      const auto& darts = patch.base_faces->faces[static_cast<std::size_t>(here.face)];
      for (std::size_t p = 0; p < darts.size(); ++p) {
        const PatchFace there = patch.across(here, p);
        if (!in_region(there.cell) || seen.count(there)) continue;
        seen.emplace(there, static_cast<int>(tree.size()));
        tree.push_back({there, static_cast<int>(i), darts[p]});
        if (patch.in_block(there.cell)) ++block_found;
      }
    }
    if (block_found < patch.faces.size()) continue;

    std::vector<char> keep(tree.size(), 0);
    for (std::size_t i = tree.size(); i-- > 0;) {
      if (patch.in_block(tree[i].face.cell)) keep[i] = 1;
      if (keep[i] && tree[i].parent >= 0) keep[static_cast<std::size_t>(tree[i].parent)] = 1;
    }
    std::vector<int> renumber(tree.size(), -1);
    for (std::size_t i = 0; i < tree.size(); ++i) {
      if (!keep[i]) continue;
      renumber[i] = static_cast<int>(patch.dual_tree.size());
      PlanarPatch::DualStep step = tree[i];
      if (step.parent >= 0) step.parent = renumber[static_cast<std::size_t>(step.parent)];
      patch.dual_tree.push_back(step);
    }
    patch.tree_node.resize(patch.faces.size());
    for (std::size_t f = 0; f < patch.faces.size(); ++f)
      patch.tree_node[f] = renumber[static_cast<std::size_t>(seen.at(patch.faces[f]))];
    return;
  }
}

}  // namespace

PlanarPatch lift_block(const TorusGraph& g, int k, int l) {
  if (k < 1 || l < 1) throw Error(Errc::BadParameters, "lift_block needs k, l >= 1");
  require_valid(g);

  PlanarPatch patch;
  patch.graph = g;
  patch.k = k;
  patch.l = l;
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < k; ++i) {
      const Vec2 cell{i, j};
      for (int w = 0; w < g.num_white(); ++w) patch.vertices.push_back({Color::White, w, cell});
      for (int b = 0; b < g.num_black(); ++b) patch.vertices.push_back({Color::Black, b, cell});
    }
  }
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < k; ++i) {
      const Vec2 cell{i, j};
      for (int w = 0; w < g.num_white(); ++w) {
        for (int e : g.white_edges(w)) {
          const Edge& ed = g.edge(e);
          LiftedEdge le;
          le.edge = e;
          le.cell = cell;
          le.white = patch.vertex_index(Color::White, w, cell);
          le.black = patch.vertex_index(Color::Black, ed.black, cell + ed.offset);
          le.dangling = le.black < 0;
          patch.edges.push_back(le);
        }
      }
    }
  }

  if (g.has_rotation()) {
    patch.base_faces = compute_faces(g);
    if (patch.base_faces->cellular && face_geometry(patch)) {
      for (int f = 0; f < patch.base_faces->num_faces(); ++f) {
        for (int j = 0; j < l; ++j) {
          for (int i = 0; i < k; ++i) patch.faces.push_back({f, Vec2{i, j}});
        }
      }
      std::sort(patch.faces.begin(), patch.faces.end());
      build_dual_tree(patch);
    }
  }
  return patch;
}

PatchFace PlanarPatch::across(PatchFace f, std::size_t p) const {
  const FaceSet& fs = *base_faces;
  const auto face = static_cast<std::size_t>(f.face);
  const int d = fs.faces[face][p];
  const int twin = dart_twin(d);
  const auto other = static_cast<std::size_t>(fs.face_of_dart[static_cast<std::size_t>(twin)]);
  const Vec2 twin_origin = f.cell + face_prefix[face][p] + dart_offset(graph, d);
  return {static_cast<int>(other),
          twin_origin - face_prefix[other][static_cast<std::size_t>(dart_position[static_cast<std::size_t>(twin)])]};
}

TorusGraph apply_gauge(const TorusGraph& g, Color color, int vertex, Vec2 c) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (color == Color::Black && e.black == vertex) e.offset += c;
    if (color == Color::White && e.white == vertex) e.offset -= c;
  }
  return TorusGraph(g.num_white(), g.num_black(), std::move(edges), g.rotation());
}

TorusGraph apply_unimodular(const TorusGraph& g, const std::array<std::int64_t, 4>& m) {
  const std::int64_t det = m[0] * m[3] - m[1] * m[2];
  if (det != 1 && det != -1) throw Error(Errc::BadParameters, "matrix is not unimodular");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    const Vec2 o = e.offset;
    e.offset = {m[0] * o.x + m[1] * o.y, m[2] * o.x + m[3] * o.y};
  }
  std::optional<RotationSystem> rot = g.rotation();
  if (rot && det < 0) {
    for (auto& cyc : rot->white) std::reverse(cyc.begin(), cyc.end());
    for (auto& cyc : rot->black) std::reverse(cyc.begin(), cyc.end());
  }
  return TorusGraph(g.num_white(), g.num_black(), std::move(edges), std::move(rot));
}

}  // namespace toricdimer
