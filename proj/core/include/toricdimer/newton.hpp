#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "toricdimer/matchings.hpp"
#include "toricdimer/vec2.hpp"

namespace toricdimer {

/// Convex lattice polygon. Vertices are extreme, counterclockwise, and start
/// at the lexicographic minimum. Empty, one vertex (point) and two vertices
/// (segment) are the degenerate shapes.
struct LatticePolygon {
  std::vector<Vec2> vertices;

  enum class Kind { Empty, Point, Segment, Polygon };
  Kind kind() const noexcept {
    switch (vertices.size()) {
      case 0: return Kind::Empty;
      case 1: return Kind::Point;
      case 2: return Kind::Segment;
      default: return Kind::Polygon;
    }
  }
  /// Closed-polygon membership with exact half-plane tests.
  bool contains(Vec2 p) const noexcept;
  /// Twice the area (shoelace).
  std::int64_t doubled_area() const noexcept;
  /// Lattice points on the boundary, from gcd of edge vectors.
  std::int64_t boundary_points() const noexcept;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

/// Monotone chain with exact integer orientation tests; collinear points dropped.
LatticePolygon convex_hull(std::span<const Vec2> points);

/// Every integer point inside or on p, ascending. The count is checked
/// against Pick's formula; a mismatch throws Errc::Inconsistent.
std::vector<Vec2> lattice_points(const LatticePolygon& p);

/// |lattice points| predicted by Pick's theorem (A + B/2 + 1), or the direct
/// count for degenerate shapes.
std::int64_t pick_count(const LatticePolygon& p);

struct NewtonReport {
  std::map<Vec2, std::int64_t> realized;  // height change -> number of matchings
  LatticePolygon polygon;
  std::vector<Vec2> lattice_points;
  std::vector<Vec2> missing;  // lattice points with no matching
  bool full_support = false;
};

/// Assembles a report from realized height changes and their counts.
NewtonReport newton_report(std::map<Vec2, std::int64_t> realized);

/// Enumerates every matching of g and compares the realized height changes
/// (relative to base) with the lattice points of their hull.
/// Throws Unbalanced, NoMatchings, or InvalidMatching for a bad base.
NewtonReport full_support_report(const TorusGraph& g, const Matching& base);

/// Same, with base = first enumerated matching.
NewtonReport full_support_report(const TorusGraph& g);

}  // namespace toricdimer
