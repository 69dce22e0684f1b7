#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricdimer/torus_graph.hpp"
#include "toricdimer/vec2.hpp"

namespace toricdimer {

/// Perfect matching, as the ascending list of its edge ids.
struct Matching {
  std::vector<int> edge_ids;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// Builds a matching from an unordered list of edge ids (sorted on the way in).
Matching make_matching(std::vector<int> edge_ids);

/// Every perfect matching of g, ordered lexicographically by edge-id sequence.
/// Throws Errc::Unbalanced when num_white != num_black. A balanced graph
/// without matchings yields an empty list; see uncovered_vertex for a reason.
std::vector<Matching> enumerate_matchings(const TorusGraph& g);

struct VertexRef {
  Color color = Color::White;
  int index = 0;
};

/// A vertex with no incident edge, if any. Certifies that no matching exists.
std::optional<VertexRef> uncovered_vertex(const TorusGraph& g);

bool is_perfect_matching(const TorusGraph& g, const Matching& m);

/// Throws Errc::InvalidMatching unless m is a perfect matching of g.
void require_matching(const TorusGraph& g, const Matching& m);

/// Sum of edge offsets over m: the exponent of m's monomial in the Kasteleyn operator.
HomologyVector homology_exponent(const TorusGraph& g, const Matching& m);

/// Homology type of the transition graph m - base.
HomologyVector height_change(const TorusGraph& g, const Matching& base, const Matching& m);

/// Alternating directed circuit of a transition graph: white[i] -> black[i]
/// along forward_edges[i] (an edge of m), then black[i] -> white[i+1] along the
/// reversed base edge reversed_edges[i].
struct Circuit {
  std::vector<int> whites;
  std::vector<int> blacks;
  std::vector<int> forward_edges;
  std::vector<int> reversed_edges;
  HomologyVector homology;

  std::size_t length() const noexcept { return 2 * forward_edges.size(); }
};

struct TransitionCycles {
  std::vector<Circuit> circuits;  // ordered by smallest white vertex
  int discarded_pairs = 0;        // edges shared by both matchings

  HomologyVector total_homology() const;
};

TransitionCycles transition_cycles(const TorusGraph& g, const Matching& base, const Matching& m);

/// Outcome of checking the divisibility structure of a transition graph with
/// total homology u != 0 and d = gcd(u): every circuit has homology 0, u/d or
/// -u/d, and (#u/d) - (#-u/d) = d.
struct DivideReport {
  HomologyVector total;
  std::int64_t d = 0;
  HomologyVector unit;  // u / d
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int other = 0;  // circuits outside {0, +-u/d}
  bool pass = false;
};

/// Throws Errc::ZeroHomology when the total homology vanishes.
DivideReport check_divide_structure(const TransitionCycles& tc);

/// base xor C for the first circuit C of homology u/d, so that the transition
/// graph to base is that single circuit. Throws Errc::ZeroHomology for u = 0.
Matching reduce_to_single_circuit(const TorusGraph& g, const Matching& base, const Matching& m);

// Heights on the faces of a lifted patch.

struct HeightField {
  std::vector<PatchFace> faces;                    // copy of patch.faces
  std::vector<std::optional<std::int64_t>> height;  // nullopt when unreachable in the block
  int base_face = 0;
};

/// Breadth-first assignment over the dual of the patch: crossing a dual edge
/// that the transition graph m - base crosses from left to right adds 1.
/// Checks every dual edge inside the block and throws
/// Errc::InconsistentHeights on a contradiction.
HeightField height_function(const PlanarPatch& patch, const Matching& base, const Matching& m,
                            int base_face = 0);

/// Differences h(F + (1,0)) - h(F) and h(F + (0,1)) - h(F) observed over
/// every pair of assigned faces in the block.
struct PeriodReport {
  std::vector<std::int64_t> dx_values;  // distinct, ascending
  std::vector<std::int64_t> dy_values;
  bool periodic() const noexcept { return dx_values.size() <= 1 && dy_values.size() <= 1; }
};

PeriodReport period_increments(const HeightField& field);

/// (h(F + (1,0)) - h(F), h(F + (0,1)) - h(F)); equals rot90(height_change).
/// Needs k, l >= 2. Throws Errc::InconsistentHeights if the increments are
/// not the same for every face.
HomologyVector tilde_height_change(const PlanarPatch& patch, const Matching& base, const Matching& m,
                                   int base_face = 0);

}  // namespace toricdimer
