#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "toricdimer/error.hpp"
#include "toricdimer/lattice.hpp"
#include "toricdimer/vec2.hpp"

namespace toricdimer {

/// Directed circulant graph on Z/nZ with arcs x -> x + a and x -> x + b.
/// Jumps are kept as residues in [0, n); repeated and zero jumps are allowed.
struct CirculantDigraph {
  std::int64_t n = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;

  static CirculantDigraph make(std::int64_t n, std::int64_t a, std::int64_t b);
  bool connected() const noexcept;
};

/// {(u, v) : a u + b v = 0 mod n}, the abelianized closed walks.
/// Throws Errc::Disconnected when gcd(n, a, b) > 1.
LatticeBasis circuit_lattice(std::int64_t n, std::int64_t a, std::int64_t b);

/// v is visible in the lattice: v != 0 and v / d is not a lattice point for
/// any d >= 2 dividing gcd(v). Throws Errc::NotInLattice when v is not in it.
bool visible_in_lattice(const LatticeBasis& lattice, Vec2 v);

/// Monotone staircase p_0, ..., p_L with unit steps (1,0) or (0,1).
struct LatticePath {
  std::vector<Vec2> points;

  std::size_t length() const noexcept { return points.empty() ? 0 : points.size() - 1; }
  Vec2 displacement() const noexcept { return points.empty() ? Vec2{} : points.back() - points.front(); }
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

enum class PathCondition { Membership, Visibility, Norm };

std::string_view to_string(PathCondition c) noexcept;

/// Errc::PreconditionViolated, naming the failed condition.
class PathPreconditionError : public Error {
 public:
  PathPreconditionError(PathCondition condition, const std::string& detail);
  PathCondition condition() const noexcept { return condition_; }

 private:
  PathCondition condition_;
};

/// The staircase from 0 to v that picks, on each diagonal x + y = i, the
/// integer point nearest to the segment [0, v] (ties toward larger x).
/// Requires v in the lattice and in N^2, v visible in the lattice, and
/// |v|_1 <= vol; the result is audited before it is returned.
LatticePath build_lattice_path(const LatticeBasis& lattice, Vec2 v);

/// True when p is a staircase and no two distinct nodes differ by a lattice
/// vector, except the two endpoints.
bool audit_lattice_path(const LatticeBasis& lattice, const LatticePath& p);

/// Vertex labels a x + b y mod n of the path nodes, endpoint excluded.
/// Throws NotClosed (empty path or endpoint label != 0) or RepeatedVertex.
std::vector<std::int64_t> path_to_circuit(const CirculantDigraph& c, const LatticePath& path);

enum class HamiltonMethod { Rankin, Visibility, BruteForce, CrossCheck };

std::string_view to_string(HamiltonMethod m) noexcept;

/// Largest n accepted by the brute-force search.
inline constexpr std::int64_t kBruteForceLimit = 12;

struct HamiltonResult {
  bool hamiltonian = false;
  std::optional<std::vector<std::int64_t>> cycle;         // vertex order starting at 0
  std::optional<std::pair<std::int64_t, std::int64_t>> rankin_witness;  // (i, j)
  std::optional<Vec2> diagonal_point;                       // visible lattice point used
  std::map<HamiltonMethod, bool> verdicts;                  // every method that ran
  bool methods_agree = true;
};

/// Hamiltonicity of the circulant digraph by the chosen method. CrossCheck
/// runs Rankin and Visibility, plus BruteForce when n <= kBruteForceLimit.
/// Throws Disconnected, or BruteForceTooLarge for BruteForce with large n.
HamiltonResult is_hamiltonian(const CirculantDigraph& c, HamiltonMethod method);

/// True when `cycle` visits every vertex once and closes using arcs +a / +b.
bool is_hamiltonian_cycle(const CirculantDigraph& c, const std::vector<std::int64_t>& cycle);

}  // namespace toricdimer
