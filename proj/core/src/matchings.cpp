#include "toricdimer/matchings.hpp"

#include <algorithm>
#include <sstream>

#include "toricdimer/error.hpp"

namespace toricdimer {

Matching make_matching(std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  return Matching{std::move(edge_ids)};
}

namespace {

struct Enumerator {
  const TorusGraph& g;
  std::vector<char> black_used;
  std::vector<int> chosen;
  std::vector<Matching> out;

  void run(int w) {
    if (w == g.num_white()) {
      out.push_back(make_matching(chosen));
      return;
    }
    for (int e : g.white_edges(w)) {
      const auto b = static_cast<std::size_t>(g.edge(e).black);
      if (black_used[b]) continue;
      black_used[b] = 1;
      chosen.push_back(e);
      run(w + 1);
      chosen.pop_back();
      black_used[b] = 0;
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_matchings(const TorusGraph& g) {
  require_valid(g);
  if (!g.balanced()) {
    std::ostringstream os;
    os << g.num_white() << " white vs " << g.num_black() << " black vertices";
    throw Error(Errc::Unbalanced, os.str());
  }
  if (uncovered_vertex(g)) return {};
  Enumerator en{g, std::vector<char>(static_cast<std::size_t>(g.num_black()), 0), {}, {}};
  en.chosen.reserve(static_cast<std::size_t>(g.num_white()));
  en.run(0);
  std::sort(en.out.begin(), en.out.end());
  return std::move(en.out);
}

std::optional<VertexRef> uncovered_vertex(const TorusGraph& g) {
  for (int w = 0; w < g.num_white(); ++w)
    if (g.white_edges(w).empty()) return VertexRef{Color::White, w};
  for (int b = 0; b < g.num_black(); ++b)
    if (g.black_edges(b).empty()) return VertexRef{Color::Black, b};
  return std::nullopt;
}

bool is_perfect_matching(const TorusGraph& g, const Matching& m) {
  if (!g.balanced() || static_cast<int>(m.edge_ids.size()) != g.num_white()) return false;
  std::vector<char> w_seen(static_cast<std::size_t>(g.num_white()), 0);
  std::vector<char> b_seen(static_cast<std::size_t>(g.num_black()), 0);
  for (int e : m.edge_ids) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (ed.white < 0 || ed.white >= g.num_white() || ed.black < 0 || ed.black >= g.num_black())
      return false;
    auto& ws = w_seen[static_cast<std::size_t>(ed.white)];
    auto& bs = b_seen[static_cast<std::size_t>(ed.black)];
    if (ws || bs) return false;
    ws = bs = 1;
  }
  return true;
}

void require_matching(const TorusGraph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) throw Error(Errc::InvalidMatching, "edge set is not a perfect matching");
}

HomologyVector homology_exponent(const TorusGraph& g, const Matching& m) {
  require_matching(g, m);
  HomologyVector sum;
  for (int e : m.edge_ids) sum += g.edge(e).offset;
  return sum;
}

HomologyVector height_change(const TorusGraph& g, const Matching& base, const Matching& m) {
  return homology_exponent(g, m) - homology_exponent(g, base);
}

HomologyVector TransitionCycles::total_homology() const {
  HomologyVector sum;
  for (const Circuit& c : circuits) sum += c.homology;
  return sum;
}

TransitionCycles transition_cycles(const TorusGraph& g, const Matching& base, const Matching& m) {
  require_matching(g, base);
  require_matching(g, m);
  const auto nw = static_cast<std::size_t>(g.num_white());
  std::vector<int> m_at_white(nw, -1);
  std::vector<int> base_at_black(static_cast<std::size_t>(g.num_black()), -1);
  for (int e : m.edge_ids) m_at_white[static_cast<std::size_t>(g.edge(e).white)] = e;
  for (int e : base.edge_ids) base_at_black[static_cast<std::size_t>(g.edge(e).black)] = e;

  TransitionCycles tc;
  std::vector<char> done(nw, 0);
  for (std::size_t start = 0; start < nw; ++start) {
    if (done[start]) continue;
    const int first = m_at_white[start];
    if (base_at_black[static_cast<std::size_t>(g.edge(first).black)] == first) {
      done[start] = 1;
      ++tc.discarded_pairs;
      continue;
    }
    Circuit c;
    auto w = static_cast<int>(start);
    do {
      done[static_cast<std::size_t>(w)] = 1;
      const int fwd = m_at_white[static_cast<std::size_t>(w)];
      const int b = g.edge(fwd).black;
      const int back = base_at_black[static_cast<std::size_t>(b)];
      c.whites.push_back(w);
      c.blacks.push_back(b);
      c.forward_edges.push_back(fwd);
      c.reversed_edges.push_back(back);
      c.homology += g.edge(fwd).offset;
      c.homology -= g.edge(back).offset;
      w = g.edge(back).white;
    } while (w != static_cast<int>(start));
    tc.circuits.push_back(std::move(c));
  }
  return tc;
}

DivideReport check_divide_structure(const TransitionCycles& tc) {
  DivideReport r;
  r.total = tc.total_homology();
  if (is_zero(r.total)) throw Error(Errc::ZeroHomology, "transition graph has zero total homology");
  r.d = content(r.total);
  r.unit = {r.total.x / r.d, r.total.y / r.d};
  for (const Circuit& c : tc.circuits) {
    if (is_zero(c.homology))
      ++r.zero;
    else if (c.homology == r.unit)
      ++r.positive;
    else if (c.homology == -r.unit)
      ++r.negative;
    else
      ++r.other;
  }
  r.pass = r.other == 0 && r.positive - r.negative == r.d;
  return r;
}

Matching reduce_to_single_circuit(const TorusGraph& g, const Matching& base, const Matching& m) {
  const TransitionCycles tc = transition_cycles(g, base, m);
  const HomologyVector u = tc.total_homology();
  if (is_zero(u)) throw Error(Errc::ZeroHomology, "nothing to reduce: height change is zero");
  const std::int64_t d = content(u);
  const HomologyVector unit{u.x / d, u.y / d};
  for (const Circuit& c : tc.circuits) {
    if (c.homology != unit) continue;
    std::vector<int> ids;
    ids.reserve(base.edge_ids.size());
    for (int e : base.edge_ids) {
      if (std::find(c.reversed_edges.begin(), c.reversed_edges.end(), e) == c.reversed_edges.end())
        ids.push_back(e);
    }
    ids.insert(ids.end(), c.forward_edges.begin(), c.forward_edges.end());
    return make_matching(std::move(ids));
  }
  throw Error(Errc::NoSuitableCircuit, "no circuit with homology u/d; the graph is not embeddable");
}

}  // namespace toricdimer
