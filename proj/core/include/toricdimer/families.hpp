#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricdimer/circulant.hpp"
#include "toricdimer/lattice.hpp"
#include "toricdimer/matchings.hpp"
#include "toricdimer/newton.hpp"
#include "toricdimer/torus_graph.hpp"

namespace toricdimer {

// ---------------------------------------------------------------------------
// B(n, r)
//
// White w_i and black b_i, i in Z/n. Each white has three edges, with ids
//   3i     type 1: w_i - b_i            offset (0, 0)
//   3i + 1 type 2: w_i - b_{i+1}        offset (1, 0) when i + 1 = n, else (0, 0)
//   3i + 2 type 3: w_i - b_{i+r mod n}  offset (floor((i + r) / n), 1)
// Type-1 edges form the base matching. Identifying w_i with b_i turns a
// matching into a set of disjoint circuits of the circulant digraph C(n; 1, r),
// type-2 edges being +1 arcs and type-3 edges +r arcs.
// ---------------------------------------------------------------------------

struct BnrGraph {
  int n = 1;
  int r = 0;
  TorusGraph graph;
  Matching base;  // all type-1 edges
};

/// Throws Errc::BadParameters unless n >= 1 and 0 <= r < n.
BnrGraph build_bnr(int n, int r);

/// Edge id of the given type (1, 2, 3) at white i.
constexpr int bnr_edge(int i, int type) noexcept { return 3 * i + (type - 1); }

/// Matching made of the edges of one type.
Matching bnr_constant_matching(int n, int type);

/// The triangle (0,0), (1,0), (r,n).
LatticePolygon realization_triangle(int n, int r);

struct Realization {
  Matching matching;
  bool constructive = true;           // false when found by enumeration fallback
  Vec2 abelianized;                   // t(u) = (n x - r y, y)
  std::optional<LatticePath> path;
  std::vector<std::int64_t> circuit;  // vertices of C(n; 1, r)
};

/// Matching of B(n, r) whose height change with respect to the type-1 base
/// is u. Visible points of the triangle are realized by the lattice-path
/// construction; u = 0 returns the base itself. A non-visible u throws
/// Errc::NotVisible unless allow_enumeration_fallback is set.
/// Throws BadParameters (gcd(r, n) != 1) or OutsideTriangle.
Realization realize_height_change(int n, int r, Vec2 u, bool allow_enumeration_fallback = false);

/// Largest n accepted by bnr_full_support.
inline constexpr int kBnrEnumerationLimit = 10;

struct BnrSupportReport {
  int n = 1;
  int r = 0;
  std::int64_t matching_count = 0;
  NewtonReport newton;
  std::vector<Vec2> triangle_points;
  bool matches_triangle = false;       // realized set == triangle lattice points
  std::vector<Vec2> visible_points;    // visible lattice points of the triangle
  std::vector<Vec2> constructive_failures;
  bool pass = false;
};

BnrSupportReport bnr_full_support(int n, int r);

// ---------------------------------------------------------------------------
// Honeycomb quotients. The period lattice is the column span of B in the
// coordinates of the lozenge lattice; whites and blacks are indexed by the
// coset representatives of its Hermite normal form. White w_c is joined to
// b_{c+(1,0)} (type x), b_{c+(0,1)} (type y) and b_c (type z); edge ids are
// 3i, 3i+1, 3i+2 respectively. Offsets are expressed in the basis given by
// the columns of B.
// ---------------------------------------------------------------------------

enum class LozengeType { X = 0, Y = 1, Z = 2 };

struct HoneycombQuotient {
  Mat2 period;
  LatticeBasis hnf{1, 0, 1};
  std::vector<Vec2> cells;  // representative of vertex i (both colors)
  TorusGraph graph;
  std::vector<LozengeType> types;  // per edge
  Matching omega_x, omega_y, omega_z;
};

/// Throws Errc::SingularMatrix when det B = 0.
HoneycombQuotient build_honeycomb(const Mat2& period);

struct LozengeVerdict {
  std::size_t matching_index = 0;
  std::array<std::int64_t, 3> counts{};  // (x, y, z)
  HomologyVector height;                  // height_change(omega_z, omega)
  bool pass = false;
};

struct CheckReport {
  std::int64_t volume = 0;  // |det B|
  HomologyVector h_x;       // height_change(omega_z, omega_x)
  HomologyVector h_y;       // height_change(omega_z, omega_y)
  std::vector<LozengeVerdict> verdicts;
  bool all_pass = false;
};

/// |det B| h(omega) = x H_x + y H_y and x + y + z = |det B| for every matching.
CheckReport lozenge_convex_combination_check(const HoneycombQuotient& h);

/// Attempt to map the relative vertex differences (3 H_x, 3 H_y against 0)
/// onto the differences of an absolute triple by an integer matrix. Reported,
/// never asserted: the absolute normalization is not recoverable combinatorially.
struct TripleMapping {
  std::array<int, 3> assignment{};  // our type (x, y, z) -> index in the triple
  std::array<std::int64_t, 4> numerators{};  // M = numerators / denominator, row-major
  std::int64_t denominator = 1;
  bool integral = false;
  bool unimodular = false;
};

std::vector<TripleMapping> absolute_triple_mapping(const CheckReport& report,
                                                   const std::array<Vec2, 3>& triple);

// ---------------------------------------------------------------------------
// Square-grid quotients: Z^2 modulo the column span of B, which must lie in
// the even sublattice so the checkerboard coloring descends. White i has edges
// 4i + {0, 1, 2, 3} towards east, north, west, south.
// ---------------------------------------------------------------------------

struct SquareGridQuotient {
  Mat2 period;
  std::vector<Vec2> white_cells;
  std::vector<Vec2> black_cells;
  TorusGraph graph;
};

/// Throws SingularMatrix, or BadParameters when a column of B has odd coordinate sum.
SquareGridQuotient build_square_grid(const Mat2& period);

}  // namespace toricdimer
