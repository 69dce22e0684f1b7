#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricdimer/vec2.hpp"

namespace toricdimer {

/// Edge of a bipartite torus graph, oriented white -> black.
///
/// `offset` counts the signed crossings of the vertical (x) and horizontal
/// (y) cuts of the fundamental domain: the black endpoint of the lift that
/// starts at the white vertex of cell c lives in cell c + offset.
struct Edge {
  int white = 0;
  int black = 0;
  Vec2 offset;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Counterclockwise cyclic order of incident edge ids around each vertex.
struct RotationSystem {
  std::vector<std::vector<int>> white;
  std::vector<std::vector<int>> black;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

enum class Color { White, Black };

/// Bipartite graph on the torus R^2/Z^2 given by one fundamental domain.
/// Immutable once constructed; validity is checked by validate_graph, not
/// by the constructor, so malformed inputs can still be reported on.
class TorusGraph {
 public:
  TorusGraph() = default;
  TorusGraph(int num_white, int num_black, std::vector<Edge> edges,
             std::optional<RotationSystem> rotation = std::nullopt);

  int num_white() const noexcept { return num_white_; }
  int num_black() const noexcept { return num_black_; }
  int num_vertices() const noexcept { return num_white_ + num_black_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  const std::optional<RotationSystem>& rotation() const noexcept { return rotation_; }
  bool has_rotation() const noexcept { return rotation_.has_value(); }
  bool balanced() const noexcept { return num_white_ == num_black_; }

  /// Edge ids incident to a white vertex, ascending. Out-of-range edges are skipped.
  const std::vector<int>& white_edges(int w) const { return white_adj_.at(static_cast<std::size_t>(w)); }
  const std::vector<int>& black_edges(int b) const { return black_adj_.at(static_cast<std::size_t>(b)); }

  /// Same graph with the rotation system dropped or replaced.
  TorusGraph with_rotation(std::optional<RotationSystem> rotation) const;

  friend bool operator==(const TorusGraph& a, const TorusGraph& b) {
    return a.num_white_ == b.num_white_ && a.num_black_ == b.num_black_ &&
           a.edges_ == b.edges_ && a.rotation_ == b.rotation_;
  }

 private:
  int num_white_ = 0;
  int num_black_ = 0;
  std::vector<Edge> edges_;
  std::optional<RotationSystem> rotation_;
  std::vector<std::vector<int>> white_adj_;
  std::vector<std::vector<int>> black_adj_;
};

struct ValidationFinding {
  std::string kind;  // "edge_out_of_range", "rotation_shape", "rotation_permutation"
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  bool balanced = false;
  bool rotation_present = false;
  bool rotation_valid = false;
  std::vector<ValidationFinding> findings;
};

ValidationReport validate_graph(const TorusGraph& g);

/// Throws Errc::InvalidGraph with the first finding when g is not valid.
void require_valid(const TorusGraph& g);

// Darts (directed edge-sides): dart 2e runs white -> black along edge e,
// dart 2e+1 runs black -> white.
constexpr int dart_of(int edge, bool from_white) noexcept { return 2 * edge + (from_white ? 0 : 1); }
constexpr int dart_edge(int dart) noexcept { return dart / 2; }
constexpr bool dart_from_white(int dart) noexcept { return dart % 2 == 0; }
constexpr int dart_twin(int dart) noexcept { return dart ^ 1; }

/// Offset accumulated by walking the dart (edge offset, negated for black -> white).
Vec2 dart_offset(const TorusGraph& g, int dart);

/// Faces traced from the rotation system. Face tracing convention: after
/// walking a dart u -> v, the next dart is the counterclockwise successor at
/// v of the reversed dart v -> u. With counterclockwise rotations each traced
/// face lies to the right of its darts.
struct FaceSet {
  std::vector<std::vector<int>> faces;  // cyclic dart sequences
  std::vector<int> face_of_dart;        // indexed by dart id
  int euler_characteristic = 0;         // V - E + F
  bool cellular = false;                // V - E + F == 0

  int num_faces() const noexcept { return static_cast<int>(faces.size()); }
};

/// Throws Errc::MissingRotation when g has no rotation system.
FaceSet compute_faces(const TorusGraph& g);

struct LiftedVertex {
  Color color = Color::White;
  int index = 0;  // base vertex index within its color class
  Vec2 cell;
};

struct LiftedEdge {
  int edge = 0;  // base edge id
  Vec2 cell;     // cell of the white endpoint
  int white = -1;  // patch vertex index
  int black = -1;  // patch vertex index, -1 when dangling
  bool dangling = false;
};

/// A face of the universal cover: torus face `face` lifted so that the
/// origin of its first dart sits in `cell`.
struct PatchFace {
  int face = 0;
  Vec2 cell;

  friend bool operator==(const PatchFace&, const PatchFace&) = default;
  friend auto operator<=>(const PatchFace&, const PatchFace&) = default;
};

/// k x l block of fundamental-domain copies, cells (i, j) with 0 <= i < k, 0 <= j < l.
/// Edges are attached to the cell of their white endpoint; an edge whose black
/// endpoint leaves the block is dangling. When the host graph carries a
/// cellular rotation system the lifted faces are listed too, together with a
/// dual spanning tree used for heights.
struct PlanarPatch {
  TorusGraph graph;
  int k = 0;
  int l = 0;
  std::vector<LiftedVertex> vertices;
  std::vector<LiftedEdge> edges;
  std::optional<FaceSet> base_faces;
  std::vector<PatchFace> faces;

  // Geometry of the torus faces: origin of the p-th dart of face f relative
  // to the origin of its first dart, and the position of each dart in its face.
  std::vector<std::vector<Vec2>> face_prefix;
  std::vector<int> dart_position;

  /// One node of a spanning tree of the dual graph of the universal cover.
  /// `dart` is the dart of the parent face crossed to reach this face.
  struct DualStep {
    PatchFace face;
    int parent = -1;
    int dart = -1;
  };
  /// Reaches every face of `faces`, through faces outside the block when the
  /// block alone is not dual-connected. Parents precede children; node 0 is faces[0].
  std::vector<DualStep> dual_tree;
  std::vector<int> tree_node;  // tree index of each entry of `faces`

  bool in_block(Vec2 cell) const noexcept {
    return cell.x >= 0 && cell.x < k && cell.y >= 0 && cell.y < l;
  }
  /// Index into `faces`, or -1 when the lifted face is outside the block.
  int face_index(PatchFace f) const;
  int vertex_index(Color c, int index, Vec2 cell) const;
  /// Lifted face on the other side of the p-th dart of f.
  PatchFace across(PatchFace f, std::size_t p) const;
};

PlanarPatch lift_block(const TorusGraph& g, int k, int l);

/// Re-lift one vertex by c: offsets of edges at a black vertex gain c, offsets
/// of edges at a white vertex lose c. Homology differences are unchanged.
TorusGraph apply_gauge(const TorusGraph& g, Color color, int vertex, Vec2 c);

/// Change of torus coordinates by an integer matrix with det = +-1, rows
/// {{m00, m01}, {m10, m11}}. A reflection reverses every rotation.
TorusGraph apply_unimodular(const TorusGraph& g, const std::array<std::int64_t, 4>& m);

}  // namespace toricdimer
