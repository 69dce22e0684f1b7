#include "toricdimer/circulant.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace toricdimer {

CirculantDigraph CirculantDigraph::make(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1) throw Error(Errc::BadParameters, "circulant needs n >= 1");
  return {n, floor_mod(a, n), floor_mod(b, n)};
}

bool CirculantDigraph::connected() const noexcept { return std::gcd(std::gcd(n, a), b) == 1; }

namespace {

// Inverse of x modulo m, for gcd(x, m) = 1 and m >= 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
  std::int64_t old_r = floor_mod(x, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return floor_mod(old_s, m);
}

}  // namespace

LatticeBasis circuit_lattice(std::int64_t n, std::int64_t a, std::int64_t b) {
  const CirculantDigraph c = CirculantDigraph::make(n, a, b);
  if (!c.connected()) {
    std::ostringstream os;
    os << "gcd(" << n << ", " << a << ", " << b << ") > 1";
    throw Error(Errc::Disconnected, os.str());
  }
  // (u, 0) in the lattice iff n / g divides u, g = gcd(a, n); the smallest
  // positive second coordinate is g / gcd(b, g) = g since gcd(a, b, n) = 1.
  const std::int64_t g = std::gcd(c.a, n);
  const std::int64_t h11 = n / g;
  const std::int64_t h22 = g / std::gcd(c.b, g);
  // solve a u = -b h22 (mod n), i.e. (a/g) u = -b h22 / g (mod n/g)
  std::int64_t u = 0;
  if (h11 > 1) {
    const std::int64_t rhs = floor_mod(-(c.b * h22) / g, h11);
    u = floor_mod(rhs * mod_inverse(c.a / g, h11), h11);
  }
  return LatticeBasis(h11, u, h22);
}

bool visible_in_lattice(const LatticeBasis& lattice, Vec2 v) {
  if (!lattice.contains(v)) {
    std::ostringstream os;
    os << v << " is not a lattice point";
    throw Error(Errc::NotInLattice, os.str());
  }
  if (is_zero(v)) return false;
  const std::int64_t g = content(v);
  for (std::int64_t d = 2; d <= g; ++d) {
    if (g % d == 0 && lattice.contains({v.x / d, v.y / d})) return false;
  }
  return true;
}

std::string_view to_string(PathCondition c) noexcept {
  switch (c) {
    case PathCondition::Membership: return "membership";
    case PathCondition::Visibility: return "visibility";
    case PathCondition::Norm: return "norm";
  }
  return "unknown";
}

PathPreconditionError::PathPreconditionError(PathCondition condition, const std::string& detail)
    : Error(Errc::PreconditionViolated, std::string(to_string(condition)) + ": " + detail),
      condition_(condition) {}

LatticePath build_lattice_path(const LatticeBasis& lattice, Vec2 v) {
  if (v.x < 0 || v.y < 0 || !lattice.contains(v)) {
    std::ostringstream os;
    os << v << " is not in the lattice within N^2";
    throw PathPreconditionError(PathCondition::Membership, os.str());
  }
  if (!visible_in_lattice(lattice, v)) {
    std::ostringstream os;
    os << v << " is not visible in the lattice";
    throw PathPreconditionError(PathCondition::Visibility, os.str());
  }
  const std::int64_t len = v.x + v.y;
  if (len > lattice.volume()) {
    std::ostringstream os;
    os << "|v|_1 = " << len << " exceeds the lattice volume " << lattice.volume();
    throw PathPreconditionError(PathCondition::Norm, os.str());
  }

  LatticePath path;
  path.points.reserve(static_cast<std::size_t>(len + 1));
  for (std::int64_t i = 0; i <= len; ++i) {
    // the segment meets x + y = i at x = i v.x / len; compare len * x against i v.x
    const std::int64_t target = i * v.x;
    const std::int64_t lo = target / len;
    const std::int64_t hi = lo + (target % len != 0 ? 1 : 0);
    const std::int64_t x = (target - lo * len < hi * len - target) ? lo : hi;
    path.points.push_back({x, i - x});
  }
  if (!audit_lattice_path(lattice, path)) {
    throw Error(Errc::Inconsistent, "diagonal staircase failed the lattice difference audit");
  }
  return path;
}

bool audit_lattice_path(const LatticeBasis& lattice, const LatticePath& p) {
  const auto& pts = p.points;
  if (pts.empty()) return false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Vec2 step = pts[i] - pts[i - 1];
    if (step != Vec2{1, 0} && step != Vec2{0, 1}) return false;
  }
  // two points differ by a lattice vector iff they share a coset representative
  std::set<Vec2> reps;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!reps.insert(lattice.reduce(pts[i]).representative).second) return false;
  }
  if (pts.size() > 1) {
    reps.erase(lattice.reduce(pts.front()).representative);
    if (reps.count(lattice.reduce(pts.back()).representative)) return false;
  }
  return true;
}

std::vector<std::int64_t> path_to_circuit(const CirculantDigraph& c, const LatticePath& path) {
  if (path.length() == 0) throw Error(Errc::NotClosed, "a circuit needs at least one arc");
  const Vec2 origin = path.points.front();
  auto label = [&](Vec2 p) {
    const Vec2 rel = p - origin;
    return floor_mod(c.a * rel.x + c.b * rel.y, c.n);
  };
  if (label(path.points.back()) != 0) throw Error(Errc::NotClosed, "path endpoint does not return to 0");
  std::vector<std::int64_t> cycle;
  std::vector<char> seen(static_cast<std::size_t>(c.n), 0);
  for (std::size_t k = 0; k + 1 < path.points.size(); ++k) {
    const std::int64_t v = label(path.points[k]);
    if (seen[static_cast<std::size_t>(v)]) {
      std::ostringstream os;
      os << "vertex " << v << " visited twice";
      throw Error(Errc::RepeatedVertex, os.str());
    }
    seen[static_cast<std::size_t>(v)] = 1;
    cycle.push_back(v);
  }
  return cycle;
}

std::string_view to_string(HamiltonMethod m) noexcept {
  switch (m) {
    case HamiltonMethod::Rankin: return "rankin";
    case HamiltonMethod::Visibility: return "visibility";
    case HamiltonMethod::BruteForce: return "brute";
    case HamiltonMethod::CrossCheck: return "cross";
  }
  return "unknown";
}

bool is_hamiltonian_cycle(const CirculantDigraph& c, const std::vector<std::int64_t>& cycle) {
  if (static_cast<std::int64_t>(cycle.size()) != c.n || cycle.empty() || cycle.front() != 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(c.n), 0);
  for (std::int64_t v : cycle) {
    if (v < 0 || v >= c.n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const std::int64_t step = floor_mod(cycle[(k + 1) % cycle.size()] - cycle[k], c.n);
    if (step != c.a && step != c.b) return false;
  }
  return true;
}

namespace {

void rankin(const CirculantDigraph& c, HamiltonResult& r) {
  const std::int64_t d = std::gcd(floor_mod(c.b - c.a, c.n), c.n);
  bool found = false;
  for (std::int64_t i = 0; i <= d && !found; ++i) {
    const std::int64_t j = d - i;
    if (std::gcd(floor_mod(c.a * i + c.b * j, c.n), c.n) == d) {
      r.rankin_witness = {i, j};
      found = true;
    }
  }
  r.verdicts[HamiltonMethod::Rankin] = found;
}

void visibility(const CirculantDigraph& c, HamiltonResult& r) {
  const LatticeBasis lattice = circuit_lattice(c.n, c.a, c.b);
  bool found = false;
  for (std::int64_t y = 0; y <= c.n && !found; ++y) {
    const Vec2 p{c.n - y, y};
    if (!lattice.contains(p) || !visible_in_lattice(lattice, p)) continue;
    const LatticePath path = build_lattice_path(lattice, p);
    std::vector<std::int64_t> cycle = path_to_circuit(c, path);
    r.diagonal_point = p;
    if (!r.cycle) r.cycle = std::move(cycle);
    found = true;
  }
  r.verdicts[HamiltonMethod::Visibility] = found;
}

bool dfs(const CirculantDigraph& c, std::vector<std::int64_t>& path, std::vector<char>& seen) {
  const std::int64_t last = path.back();
  if (static_cast<std::int64_t>(path.size()) == c.n) {
    return floor_mod(last + c.a, c.n) == 0 || floor_mod(last + c.b, c.n) == 0;
  }
  for (std::int64_t jump : {c.a, c.b}) {
    const std::int64_t next = floor_mod(last + jump, c.n);
    if (seen[static_cast<std::size_t>(next)]) continue;
    seen[static_cast<std::size_t>(next)] = 1;
    path.push_back(next);
    if (dfs(c, path, seen)) return true;
    path.pop_back();
    seen[static_cast<std::size_t>(next)] = 0;
  }
  return false;
}

void brute_force(const CirculantDigraph& c, HamiltonResult& r) {
  std::vector<std::int64_t> path{0};
  std::vector<char> seen(static_cast<std::size_t>(c.n), 0);
  seen[0] = 1;
  const bool found = dfs(c, path, seen);
  if (found && !r.cycle) r.cycle = path;
  r.verdicts[HamiltonMethod::BruteForce] = found;
}

}  // namespace

HamiltonResult is_hamiltonian(const CirculantDigraph& input, HamiltonMethod method) {
  const CirculantDigraph c = CirculantDigraph::make(input.n, input.a, input.b);
  if (!c.connected()) throw Error(Errc::Disconnected, "Hamiltonicity criteria need gcd(n, a, b) = 1");
  if (method == HamiltonMethod::BruteForce && c.n > kBruteForceLimit) {
    throw Error(Errc::BruteForceTooLarge, "brute force is limited to n <= 12");
  }
  HamiltonResult r;
  switch (method) {
    case HamiltonMethod::Rankin: rankin(c, r); break;
    case HamiltonMethod::Visibility: visibility(c, r); break;
    case HamiltonMethod::BruteForce: brute_force(c, r); break;
    case HamiltonMethod::CrossCheck:
      rankin(c, r);
      visibility(c, r);
      if (c.n <= kBruteForceLimit) brute_force(c, r);
      break;
  }
  r.hamiltonian = r.verdicts.begin()->second;
  for (const auto& [m, v] : r.verdicts) r.methods_agree = r.methods_agree && v == r.hamiltonian;
  if (r.cycle && !is_hamiltonian_cycle(c, *r.cycle)) {
    throw Error(Errc::Inconsistent, "witness is not a Hamiltonian cycle");
  }
  return r;
}

}  // namespace toricdimer
