#include "toricdimer/newton.hpp"

#include <algorithm>

#include "toricdimer/error.hpp"

namespace toricdimer {

namespace {

std::int64_t orient(Vec2 o, Vec2 a, Vec2 b) noexcept { return cross(a - o, b - o); }

}  // namespace

LatticePolygon convex_hull(std::span<const Vec2> input) {
  std::vector<Vec2> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return LatticePolygon{pts};

  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return LatticePolygon{hull};
}

bool LatticePolygon::contains(Vec2 p) const noexcept {
  switch (kind()) {
    case Kind::Empty: return false;
    case Kind::Point: return p == vertices[0];
    case Kind::Segment: {
      const Vec2 a = vertices[0], b = vertices[1];
      if (orient(a, b, p) != 0) return false;
      return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
             p.y <= std::max(a.y, b.y);
    }
    case Kind::Polygon:
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (orient(vertices[i], vertices[(i + 1) % vertices.size()], p) < 0) return false;
      }
      return true;
  }
  return false;
}

std::int64_t LatticePolygon::doubled_area() const noexcept {
  std::int64_t a = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) a += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  return a;
}

std::int64_t LatticePolygon::boundary_points() const noexcept {
  switch (kind()) {
    case Kind::Empty: return 0;
    case Kind::Point: return 1;
    case Kind::Segment: return content(vertices[1] - vertices[0]) + 1;
    case Kind::Polygon: {
      std::int64_t b = 0;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        b += content(vertices[(i + 1) % vertices.size()] - vertices[i]);
      return b;
    }
  }
  return 0;
}

std::int64_t pick_count(const LatticePolygon& p) {
  if (p.kind() != LatticePolygon::Kind::Polygon) return p.boundary_points();
  // I = A - B/2 + 1, total = I + B = (2A + B + 2) / 2
  return (p.doubled_area() + p.boundary_points() + 2) / 2;
}

std::vector<Vec2> lattice_points(const LatticePolygon& p) {
  std::vector<Vec2> out;
  if (p.kind() == LatticePolygon::Kind::Empty) return out;
  Vec2 lo = p.vertices.front(), hi = p.vertices.front();
  for (const Vec2& v : p.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  for (std::int64_t x = lo.x; x <= hi.x; ++x)
    for (std::int64_t y = lo.y; y <= hi.y; ++y)
      if (p.contains({x, y})) out.push_back({x, y});
  if (static_cast<std::int64_t>(out.size()) != pick_count(p))
    throw Error(Errc::Inconsistent, "lattice point scan disagrees with Pick's formula");
  return out;
}

NewtonReport newton_report(std::map<Vec2, std::int64_t> realized) {
  NewtonReport r;
  r.realized = std::move(realized);
  std::vector<Vec2> pts;
  for (const auto& kv : r.realized) pts.push_back(kv.first);
  r.polygon = convex_hull(pts);
  r.lattice_points = lattice_points(r.polygon);
  for (const Vec2& p : r.lattice_points)
    if (!r.realized.contains(p)) r.missing.push_back(p);
  r.full_support = r.missing.empty();
  return r;
}

NewtonReport full_support_report(const TorusGraph& g, const Matching& base) {
  require_matching(g, base);
  const std::vector<Matching> all = enumerate_matchings(g);
  if (all.empty()) throw Error(Errc::NoMatchings, "graph has no perfect matching");
  const HomologyVector phi0 = homology_exponent(g, base);
  std::map<Vec2, std::int64_t> realized;
  for (const Matching& m : all) ++realized[homology_exponent(g, m) - phi0];
  return newton_report(std::move(realized));
}

NewtonReport full_support_report(const TorusGraph& g) {
  const std::vector<Matching> all = enumerate_matchings(g);
  if (all.empty()) throw Error(Errc::NoMatchings, "graph has no perfect matching");
  return full_support_report(g, all.front());
}

}  // namespace toricdimer
