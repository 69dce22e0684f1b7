#include "toricdimer/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "toricdimer/error.hpp"

namespace toricdimer {

BnrGraph build_bnr(int n, int r) {
  if (n < 1 || r < 0 || r >= n) {
    std::ostringstream os;
    os << "B(n, r) needs n >= 1 and 0 <= r < n, got n = " << n << ", r = " << r;
    throw Error(Errc::BadParameters, os.str());
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * n));
  RotationSystem rot;
  rot.white.resize(static_cast<std::size_t>(n));
  rot.black.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, i, {0, 0}});
    edges.push_back({i, (i + 1) % n, {i + 1 == n ? 1 : 0, 0}});
    edges.push_back({i, (i + r) % n, {(i + r) / n, 1}});
    // white: type 2 points east, type 3 up, type 1 west
    rot.white[static_cast<std::size_t>(i)] = {bnr_edge(i, 1), bnr_edge(i, 2), bnr_edge(i, 3)};
  }
  for (int j = 0; j < n; ++j) {
    // black: type 1 points east, type 2 west, type 3 down
    rot.black[static_cast<std::size_t>(j)] = {bnr_edge(j, 1), bnr_edge((j - 1 + n) % n, 2),
                                              bnr_edge(((j - r) % n + n) % n, 3)};
  }
  BnrGraph out;
  out.n = n;
  out.r = r;
  out.graph = TorusGraph(n, n, std::move(edges), std::move(rot));
  out.base = bnr_constant_matching(n, 1);
  return out;
}

Matching bnr_constant_matching(int n, int type) {
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) ids.push_back(bnr_edge(i, type));
  return make_matching(std::move(ids));
}

LatticePolygon realization_triangle(int n, int r) {
  const std::array<Vec2, 3> v{Vec2{0, 0}, Vec2{1, 0}, Vec2{r, n}};
  return convex_hull(v);
}

namespace {

void require_coprime(int n, int r) {
  if (n < 1 || r < 0 || r >= n || std::gcd(r, n) != 1) {
    std::ostringstream os;
    os << "realization needs 0 <= r < n with gcd(r, n) = 1, got n = " << n << ", r = " << r;
    throw Error(Errc::BadParameters, os.str());
  }
}

}  // namespace

Realization realize_height_change(int n, int r, Vec2 u, bool allow_enumeration_fallback) {
  require_coprime(n, r);
  if (!realization_triangle(n, r).contains(u)) {
    std::ostringstream os;
    os << u << " lies outside the triangle (0,0), (1,0), (" << r << "," << n << ")";
    throw Error(Errc::OutsideTriangle, os.str());
  }
  const BnrGraph g = build_bnr(n, r);
  Realization out;
  out.abelianized = {static_cast<std::int64_t>(n) * u.x - static_cast<std::int64_t>(r) * u.y, u.y};

  if (is_zero(u)) {
    out.matching = g.base;
    return out;
  }
  if (!visible_in_z2(u)) {
    if (!allow_enumeration_fallback) {
      std::ostringstream os;
      os << u << " is not a visible lattice point";
      throw Error(Errc::NotVisible, os.str());
    }
    for (const Matching& m : enumerate_matchings(g.graph)) {
      if (height_change(g.graph, g.base, m) == u) {
        out.matching = m;
        out.constructive = false;
        return out;
      }
    }
    throw Error(Errc::Inconsistent, "no matching realizes a lattice point of the triangle");
  }

  const CirculantDigraph circ = CirculantDigraph::make(n, 1, r);
  const LatticeBasis lattice = circuit_lattice(n, 1, r);
  LatticePath path = build_lattice_path(lattice, out.abelianized);
  out.circuit = path_to_circuit(circ, path);

  std::vector<int> ids;
  std::vector<char> on_circuit(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < out.circuit.size(); ++k) {
    const int v = static_cast<int>(out.circuit[k]);
    on_circuit[static_cast<std::size_t>(v)] = 1;
    const Vec2 step = path.points[k + 1] - path.points[k];
    ids.push_back(bnr_edge(v, step == Vec2{1, 0} ? 2 : 3));
  }
  for (int v = 0; v < n; ++v)
    if (!on_circuit[static_cast<std::size_t>(v)]) ids.push_back(bnr_edge(v, 1));
  out.matching = make_matching(std::move(ids));
  out.path = std::move(path);

  const TransitionCycles tc = transition_cycles(g.graph, g.base, out.matching);
  if (tc.circuits.size() != 1 || tc.total_homology() != u) {
    throw Error(Errc::Inconsistent, "constructed matching does not realize the target as one circuit");
  }
  return out;
}

BnrSupportReport bnr_full_support(int n, int r) {
  require_coprime(n, r);
  if (n > kBnrEnumerationLimit) throw Error(Errc::BadParameters, "n is too large for enumeration");
  const BnrGraph g = build_bnr(n, r);
  BnrSupportReport rep;
  rep.n = n;
  rep.r = r;
  const std::vector<Matching> all = enumerate_matchings(g.graph);
  rep.matching_count = static_cast<std::int64_t>(all.size());
  std::map<Vec2, std::int64_t> realized;
  for (const Matching& m : all) ++realized[height_change(g.graph, g.base, m)];
  rep.newton = newton_report(std::move(realized));
  rep.triangle_points = lattice_points(realization_triangle(n, r));
  std::vector<Vec2> hit;
  for (const auto& kv : rep.newton.realized) hit.push_back(kv.first);
  rep.matches_triangle = hit == rep.triangle_points;
  for (const Vec2& p : rep.triangle_points) {
    if (!visible_in_z2(p)) continue;
    rep.visible_points.push_back(p);
    try {
      const Realization z = realize_height_change(n, r, p);
      if (height_change(g.graph, g.base, z.matching) != p) rep.constructive_failures.push_back(p);
    } catch (const Error&) {
      rep.constructive_failures.push_back(p);
    }
  }
  rep.pass = rep.newton.full_support && rep.matches_triangle && rep.constructive_failures.empty();
  return rep;
}

namespace {

struct CosetIndex {
  LatticeBasis hnf;
  Mat2 period;
  std::map<Vec2, int> index;

  // Index of the vertex at c (mod the period) and the offset of the lift
  // reached, in the basis of the period columns.
  std::pair<int, Vec2> locate(Vec2 c) const {
    const auto red = hnf.reduce(c);
    const auto coords = period.solve(red.lattice_vector);
    if (!coords) throw Error(Errc::Inconsistent, "lattice vector outside the period lattice");
    return {index.at(red.representative), *coords};
  }
};

LatticeBasis period_hnf(const Mat2& period) {
  if (period.det() == 0) throw Error(Errc::SingularMatrix, "period matrix has zero determinant");
  const std::array<Vec2, 2> cols{period.column(0), period.column(1)};
  return LatticeBasis::from_generators(cols);
}

void reverse_rotation(RotationSystem& rot) {
  for (auto& cyc : rot.white) std::reverse(cyc.begin(), cyc.end());
  for (auto& cyc : rot.black) std::reverse(cyc.begin(), cyc.end());
}

}  // namespace

HoneycombQuotient build_honeycomb(const Mat2& period) {
  HoneycombQuotient h;
  h.period = period;
  h.hnf = period_hnf(period);
  h.cells = h.hnf.coset_representatives();
  CosetIndex idx{h.hnf, period, {}};
  for (std::size_t i = 0; i < h.cells.size(); ++i) idx.index.emplace(h.cells[i], static_cast<int>(i));

  const int count = static_cast<int>(h.cells.size());
  constexpr std::array<Vec2, 3> kStep{Vec2{1, 0}, Vec2{0, 1}, Vec2{0, 0}};
  std::vector<Edge> edges;
  RotationSystem rot;
  rot.white.resize(static_cast<std::size_t>(count));
  rot.black.resize(static_cast<std::size_t>(count));
  std::vector<int> omega[3];
  for (int i = 0; i < count; ++i) {
    for (int t = 0; t < 3; ++t) {
      const auto [b, off] = idx.locate(h.cells[static_cast<std::size_t>(i)] + kStep[static_cast<std::size_t>(t)]);
      edges.push_back({i, b, off});
      h.types.push_back(static_cast<LozengeType>(t));
      omega[t].push_back(3 * i + t);
    }
    rot.white[static_cast<std::size_t>(i)] = {3 * i, 3 * i + 1, 3 * i + 2};
  }
  for (int j = 0; j < count; ++j) {
    const Vec2 c = h.cells[static_cast<std::size_t>(j)];
    const int wx = idx.locate(c - kStep[0]).first;
    const int wy = idx.locate(c - kStep[1]).first;
    rot.black[static_cast<std::size_t>(j)] = {3 * wx, 3 * wy + 1, 3 * j + 2};
  }
  // counterclockwise in lozenge coordinates is clockwise in a negatively
  // oriented period basis
  if (period.det() < 0) reverse_rotation(rot);
  h.graph = TorusGraph(count, count, std::move(edges), std::move(rot));
  h.omega_x = make_matching(omega[0]);
  h.omega_y = make_matching(omega[1]);
  h.omega_z = make_matching(omega[2]);
  return h;
}

CheckReport lozenge_convex_combination_check(const HoneycombQuotient& h) {
  const TorusGraph& g = h.graph;
  CheckReport rep;
  rep.volume = h.period.det() < 0 ? -h.period.det() : h.period.det();
  rep.h_x = height_change(g, h.omega_z, h.omega_x);
  rep.h_y = height_change(g, h.omega_z, h.omega_y);
  const std::vector<Matching> all = enumerate_matchings(g);
  rep.all_pass = true;
  for (std::size_t k = 0; k < all.size(); ++k) {
    LozengeVerdict v;
    v.matching_index = k;
    for (int e : all[k].edge_ids) ++v.counts[static_cast<std::size_t>(h.types[static_cast<std::size_t>(e)])];
    v.height = height_change(g, h.omega_z, all[k]);
    const Vec2 lhs = rep.volume * v.height;
    const Vec2 rhs = v.counts[0] * rep.h_x + v.counts[1] * rep.h_y;
    v.pass = lhs == rhs && v.counts[0] + v.counts[1] + v.counts[2] == rep.volume;
    rep.all_pass = rep.all_pass && v.pass;
    rep.verdicts.push_back(v);
  }
  return rep;
}

std::vector<TripleMapping> absolute_triple_mapping(const CheckReport& report, const std::array<Vec2, 3>& triple) {
  // ours: differences to the z vertex are 3 H_x and 3 H_y
  const Vec2 dx = 3 * report.h_x, dy = 3 * report.h_y;
  const std::int64_t det_d = cross(dx, dy);
  std::vector<TripleMapping> out;
  if (det_d == 0) return out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    TripleMapping m;
    m.assignment = perm;
    const Vec2 p1 = triple[static_cast<std::size_t>(perm[0])] - triple[static_cast<std::size_t>(perm[2])];
    const Vec2 p2 = triple[static_cast<std::size_t>(perm[1])] - triple[static_cast<std::size_t>(perm[2])];
    // M = P adj(D) / det(D), columns of P = (p1, p2), columns of D = (dx, dy)
    std::array<std::int64_t, 4> num{p1.x * dy.y - p2.x * dx.y, -p1.x * dy.x + p2.x * dx.x,
                                    p1.y * dy.y - p2.y * dx.y, -p1.y * dy.x + p2.y * dx.x};
    std::int64_t den = det_d;
    std::int64_t g = den < 0 ? -den : den;
    for (std::int64_t v : num) g = std::gcd(g, v < 0 ? -v : v);
    if (den < 0) g = -g;
    for (auto& v : num) v /= g;
    den /= g;
    m.numerators = num;
    m.denominator = den;
    m.integral = den == 1;
    const std::int64_t det_m = num[0] * num[3] - num[1] * num[2];
    m.unimodular = m.integral && (det_m == 1 || det_m == -1);
    out.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SquareGridQuotient build_square_grid(const Mat2& period) {
  const LatticeBasis hnf = period_hnf(period);
  for (int j = 0; j < 2; ++j) {
    const Vec2 c = period.column(j);
    if (floor_mod(c.x + c.y, 2) != 0) throw Error(Errc::BadParameters, "period columns must have even coordinate sum");
  }
  SquareGridQuotient q;
  q.period = period;
  std::map<Vec2, int> white_index, black_index;
  for (const Vec2& c : hnf.coset_representatives()) {
    if (floor_mod(c.x + c.y, 2) == 0) {
      white_index.emplace(c, static_cast<int>(q.white_cells.size()));
      q.white_cells.push_back(c);
    } else {
      black_index.emplace(c, static_cast<int>(q.black_cells.size()));
      q.black_cells.push_back(c);
    }
  }
  CosetIndex widx{hnf, period, white_index};
  CosetIndex bidx{hnf, period, black_index};

  constexpr std::array<Vec2, 4> kDir{Vec2{1, 0}, Vec2{0, 1}, Vec2{-1, 0}, Vec2{0, -1}};
  const int nw = static_cast<int>(q.white_cells.size());
  std::vector<Edge> edges;
  RotationSystem rot;
  rot.white.resize(static_cast<std::size_t>(nw));
  rot.black.resize(q.black_cells.size());
  for (int i = 0; i < nw; ++i) {
    for (int t = 0; t < 4; ++t) {
      const auto [b, off] = bidx.locate(q.white_cells[static_cast<std::size_t>(i)] + kDir[static_cast<std::size_t>(t)]);
      edges.push_back({i, b, off});
    }
    rot.white[static_cast<std::size_t>(i)] = {4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
  }
  for (std::size_t j = 0; j < q.black_cells.size(); ++j) {
    auto& cyc = rot.black[j];
    for (int t = 0; t < 4; ++t) {
      // the white neighbour in direction t reaches back with the opposite direction
      const int w = widx.locate(q.black_cells[j] + kDir[static_cast<std::size_t>(t)]).first;
      cyc.push_back(4 * w + (t + 2) % 4);
    }
  }
  if (period.det() < 0) reverse_rotation(rot);
  q.graph = TorusGraph(nw, static_cast<int>(q.black_cells.size()), std::move(edges), std::move(rot));
  return q;
}

}  // namespace toricdimer
