#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace toricdimer::testing {

TorusGraph honeycomb_cell() {
  return TorusGraph(1, 1, {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {0, 0, {0, 1}}},
                    RotationSystem{{{0, 1, 2}}, {{0, 1, 2}}});
}

TorusGraph honeycomb_cell_mirrored_black() {
  return TorusGraph(1, 1, {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {0, 0, {0, 1}}},
                    RotationSystem{{{0, 1, 2}}, {{0, 2, 1}}});
}

TorusGraph square_grid_2x2() { return build_square_grid(Mat2{2, 0, 0, 2}).graph; }

TorusGraph delete_edges(const TorusGraph& g, const std::vector<int>& doomed) {
  std::vector<int> new_id(static_cast<std::size_t>(g.num_edges()), -1);
  std::vector<Edge> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (std::find(doomed.begin(), doomed.end(), e) != doomed.end()) continue;
    new_id[static_cast<std::size_t>(e)] = static_cast<int>(edges.size());
    edges.push_back(g.edge(e));
  }
  std::optional<RotationSystem> rot;
  if (g.has_rotation()) {
    auto remap = [&](const std::vector<std::vector<int>>& orders) {
      std::vector<std::vector<int>> out;
      for (const auto& cyc : orders) {
        std::vector<int> kept;
        for (int e : cyc)
          if (new_id[static_cast<std::size_t>(e)] >= 0) kept.push_back(new_id[static_cast<std::size_t>(e)]);
        out.push_back(std::move(kept));
      }
      return out;
    };
    rot = RotationSystem{remap(g.rotation()->white), remap(g.rotation()->black)};
  }
  TorusGraph out(g.num_white(), g.num_black(), std::move(edges), rot);
  if (out.has_rotation() && !compute_faces(out).cellular) out = out.with_rotation(std::nullopt);
  return out;
}

namespace {

Mat2 random_period(std::mt19937_64& rng, std::int64_t max_det, bool even_columns) {
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  for (;;) {
    Mat2 m{entry(rng), entry(rng), entry(rng), entry(rng)};
    const std::int64_t d = m.det() < 0 ? -m.det() : m.det();
    if (d == 0 || d > max_det) continue;
    if (even_columns && ((m.a + m.c) % 2 != 0 || (m.b + m.d) % 2 != 0)) continue;
    return m;
  }
}

std::string describe(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

}  // namespace

NamedGraph random_embedded_graph(std::mt19937_64& rng, int max_whites) {
  std::uniform_int_distribution<int> family(0, 2);
  NamedGraph base;
  switch (family(rng)) {
    case 0: {
      const Mat2 p = random_period(rng, max_whites, false);
      base = {"honeycomb" + describe(p), build_honeycomb(p).graph};
      break;
    }
    case 1: {
      const Mat2 p = random_period(rng, 2 * static_cast<std::int64_t>(max_whites), true);
      base = {"square" + describe(p), build_square_grid(p).graph};
      break;
    }
    default: {
      std::uniform_int_distribution<int> nd(1, max_whites);
      const int n = nd(rng);
      std::uniform_int_distribution<int> rd(0, n - 1);
      const int r = rd(rng);
      base = {"B(" + std::to_string(n) + "," + std::to_string(r) + ")", build_bnr(n, r).graph};
      break;
    }
  }

  std::bernoulli_distribution drop(0.2);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<int> doomed;
    for (int e = 0; e < base.graph.num_edges(); ++e)
      if (drop(rng)) doomed.push_back(e);
    TorusGraph g = delete_edges(base.graph, doomed);
    if (enumerate_matchings(g).empty()) continue;

    std::uniform_int_distribution<int> shift(-2, 2);
    for (int w = 0; w < g.num_white(); ++w) g = apply_gauge(g, Color::White, w, {shift(rng), shift(rng)});
    for (int b = 0; b < g.num_black(); ++b) g = apply_gauge(g, Color::Black, b, {shift(rng), shift(rng)});
    static const std::array<std::array<std::int64_t, 4>, 5> kUnimodular{
        {{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}}};
    std::uniform_int_distribution<std::size_t> pick(0, kUnimodular.size() - 1);
    g = apply_unimodular(g, kUnimodular[pick(rng)]);
    return {base.name + " minus " + std::to_string(doomed.size()) + " edges", g};
  }
  return base;
}

std::map<Vec2, std::int64_t> permutation_oracle(const TorusGraph& g) {
  std::map<Vec2, std::int64_t> counts;
  const int n = g.num_white();
  if (n != g.num_black()) return counts;
  // parallel[w][b] = offsets of every edge w - b
  std::vector<std::vector<std::vector<Vec2>>> parallel(
      static_cast<std::size_t>(n), std::vector<std::vector<Vec2>>(static_cast<std::size_t>(n)));
  for (const Edge& e : g.edges())
    parallel[static_cast<std::size_t>(e.white)][static_cast<std::size_t>(e.black)].push_back(e.offset);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<Vec2, std::int64_t> partial{{Vec2{0, 0}, 1}};
    for (int w = 0; w < n && !partial.empty(); ++w) {
      std::map<Vec2, std::int64_t> next;
      for (const auto& [v, c] : partial)
        for (Vec2 o : parallel[static_cast<std::size_t>(w)][static_cast<std::size_t>(perm[static_cast<std::size_t>(w)])])
          next[v + o] += c;
      partial = std::move(next);
    }
    for (const auto& [v, c] : partial) counts[v] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

LaurentPoly2 leibniz_determinant(const OperatorMatrix& m) {
  const int n = m.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly2 det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    LaurentPoly2 term = LaurentPoly2::constant(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * m.at(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool exhaustive_path_exists(const LatticeBasis& lattice, Vec2 v) {
  if (v.x < 0 || v.y < 0 || v.x + v.y == 0) return false;
  const auto len = static_cast<int>(v.x + v.y);
  // choose which steps go right: all subsets of size v.x
  std::vector<int> steps(static_cast<std::size_t>(len), 0);
  std::fill(steps.begin(), steps.begin() + v.x, 1);
  std::sort(steps.begin(), steps.end());
  do {
    std::vector<Vec2> pts{{0, 0}};
    for (int s : steps) pts.push_back(pts.back() + (s ? Vec2{1, 0} : Vec2{0, 1}));
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        if (i == 0 && j + 1 == pts.size()) continue;
        const Vec2 d = pts[j] - pts[i];
        // membership straight from the HNF generators
        if (d.y % lattice.h22() == 0 && (d.x - (d.y / lattice.h22()) * lattice.h21()) % lattice.h11() == 0) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(steps.begin(), steps.end()));
  return false;
}

bool permutation_hamiltonian(std::int64_t n, std::int64_t a, std::int64_t b) {
  auto arc = [&](std::int64_t from, std::int64_t to) {
    const std::int64_t step = ((to - from) % n + n) % n;
    return step == ((a % n) + n) % n || step == ((b % n) + n) % n;
  };
  std::vector<std::int64_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < order.size() && ok; ++k) ok = arc(order[k], order[(k + 1) % order.size()]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

}  // namespace toricdimer::testing
