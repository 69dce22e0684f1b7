#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace toricdimer;
using namespace toricdimer::testing;

namespace {

bool throws_condition(const LatticeBasis& l, Vec2 v, PathCondition c) {
  try {
    build_lattice_path(l, v);
  } catch (const PathPreconditionError& e) {
    return e.condition() == c && e.code() == Errc::PreconditionViolated;
  }
  return false;
}

}  // namespace

TEST_CASE("HNF basis validation and membership") {
  CHECK_THROWS_AS(LatticeBasis(0, 0, 1), Error);
  CHECK_THROWS_AS(LatticeBasis(3, 3, 1), Error);
  const LatticeBasis l(5, 3, 1);
  CHECK(l.contains({3, 1}));
  CHECK(l.contains({-2, 1}));
  CHECK_FALSE(l.contains({1, 0}));
  CHECK(l.volume() == 5);
  const auto red = l.reduce({7, -3});
  CHECK(red.representative.y == 0);
  CHECK(l.contains(red.lattice_vector));
  CHECK(red.representative + red.lattice_vector == Vec2{7, -3});
}

TEST_CASE("HNF from generators") {
  const std::vector<Vec2> gens{{5, 0}, {-2, 1}};
  CHECK(LatticeBasis::from_generators(gens) == LatticeBasis(5, 3, 1));
  const std::vector<Vec2> b{{3, 4}, {-5, 4}};
  const auto l = LatticeBasis::from_generators(b);
  CHECK(l.volume() == 32);
  CHECK(l.contains({3, 4}));
  CHECK(l.contains({-5, 4}));
  const std::vector<Vec2> flat{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(LatticeBasis::from_generators(flat), Error);
}

TEST_CASE("sublattice counts are the divisor sums") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    std::int64_t sigma = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) sigma += d;
    CHECK(static_cast<std::int64_t>(sublattices_of_volume(n).size()) == sigma);
  }
}

TEST_CASE("circuit lattices") {
  for (std::int64_t n = 1; n <= 9; ++n)
    for (std::int64_t b = 0; b < n; ++b) {
      const auto l = circuit_lattice(n, 1, b);
      const std::vector<Vec2> gens{{n, 0}, {-b, 1}};
      CHECK(l == LatticeBasis::from_generators(gens));
    }
  const auto l512 = circuit_lattice(5, 1, 2);
  CHECK(l512.contains({3, 1}));
  const auto l623 = circuit_lattice(6, 2, 3);
  CHECK(l623.volume() == 6);
  CHECK(l623.contains({0, 2}));
  CHECK(l623.contains({3, 0}));
  CHECK_THROWS_AS(circuit_lattice(6, 2, 4), Error);
}

TEST_CASE("circuit lattice membership equals the label test") {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        if (std::gcd(std::gcd(n, a), b) != 1) continue;
        const auto l = circuit_lattice(n, a, b);
        CHECK(l.volume() == n);
        for (std::int64_t u = -3; u <= 12; ++u)
          for (std::int64_t v = -3; v <= 12; ++v) CHECK(l.contains({u, v}) == (((a * u + b * v) % n + n) % n == 0));
      }
}

TEST_CASE("visibility in a lattice") {
  const auto l = circuit_lattice(5, 1, 2);
  CHECK(visible_in_lattice(l, {3, 1}));
  CHECK(visible_in_lattice(l, {5, 0}));
  CHECK_FALSE(visible_in_lattice(l, {6, 2}));
  CHECK_FALSE(visible_in_lattice(LatticeBasis(1, 0, 1), {2, 0}));
  CHECK_FALSE(visible_in_lattice(l, {0, 0}));
  CHECK_THROWS_AS(visible_in_lattice(l, {1, 0}), Error);
  CHECK(visible_in_z2({0, 0}));
  CHECK(visible_in_z2({3, -2}));
  CHECK_FALSE(visible_in_z2({4, -2}));
}

TEST_CASE("lattice path for (3,1) in C(5;1,2)") {
  const auto l = circuit_lattice(5, 1, 2);
  const auto p = build_lattice_path(l, {3, 1});
  // the tie on x + y = 2 between (2,0) and (1,1) goes to (2,0)
  CHECK(p.points == std::vector<Vec2>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}});
  CHECK(audit_lattice_path(l, p));
  const auto c = CirculantDigraph::make(5, 1, 2);
  CHECK(path_to_circuit(c, p) == std::vector<std::int64_t>{0, 1, 2, 4});
}

TEST_CASE("lattice path preconditions") {
  const auto l = circuit_lattice(5, 1, 2);
  CHECK(throws_condition(l, {1, 0}, PathCondition::Membership));
  CHECK(throws_condition(l, {-2, 1}, PathCondition::Membership));
  CHECK(throws_condition(l, {6, 2}, PathCondition::Visibility));
  CHECK(throws_condition(l, {0, 0}, PathCondition::Visibility));
  CHECK(throws_condition(l, {4, 3}, PathCondition::Norm));
  CHECK(throws_condition(LatticeBasis(1, 0, 1), {1, 1}, PathCondition::Norm));
}

TEST_CASE("path construction agrees with exhaustive search on small lattices") {
  for (std::int64_t vol = 1; vol <= 7; ++vol)
    for (const auto& l : sublattices_of_volume(vol))
      for (std::int64_t x = 0; x <= vol + 2; ++x)
        for (std::int64_t y = 0; x + y <= vol + 2; ++y) {
          const Vec2 v{x, y};
          if (is_zero(v) || !l.contains(v)) continue;
          const bool expected = visible_in_lattice(l, v) && x + y <= vol;
          CHECK(exhaustive_path_exists(l, v) == expected);
          bool built = false;
          try {
            built = audit_lattice_path(l, build_lattice_path(l, v));
          } catch (const PathPreconditionError&) {
          }
          CHECK(built == expected);
        }
}

TEST_CASE("path to circuit errors") {
  const auto c = CirculantDigraph::make(5, 1, 2);
  CHECK_THROWS_AS(path_to_circuit(c, LatticePath{}), Error);
  CHECK_THROWS_AS(path_to_circuit(c, LatticePath{{{0, 0}, {1, 0}}}), Error);
  // (0,0) .. (5,0) .. (10,0) revisits 0
  LatticePath twice;
  for (std::int64_t x = 0; x <= 10; ++x) twice.points.push_back({x, 0});
  CHECK_THROWS_AS(path_to_circuit(c, twice), Error);
}

TEST_CASE("x-steps give the rotation circuit in C(n;1,1)") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto l = circuit_lattice(n, 1, 1);
    const auto p = build_lattice_path(l, {n, 0});
    std::vector<std::int64_t> expected(static_cast<std::size_t>(n));
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(path_to_circuit(CirculantDigraph::make(n, 1, 1), p) == expected);
  }
}

TEST_CASE("circuit labels step by a or b") {
  for (std::int64_t n = 2; n <= 9; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        if (std::gcd(std::gcd(n, a), b) != 1) continue;
        const auto c = CirculantDigraph::make(n, a, b);
        const auto l = circuit_lattice(n, a, b);
        for (std::int64_t x = 0; x <= n; ++x)
          for (std::int64_t y = 0; x + y <= n; ++y) {
            if ((x == 0 && y == 0) || !l.contains({x, y}) || !visible_in_lattice(l, {x, y})) continue;
            const auto p = build_lattice_path(l, {x, y});
            const auto labels = path_to_circuit(c, p);
            for (std::size_t k = 0; k < labels.size(); ++k) {
              const std::int64_t step = ((labels[(k + 1) % labels.size()] - labels[k]) % n + n) % n;
              CHECK((step == c.a || step == c.b));
            }
          }
      }
}

TEST_CASE("Hamiltonicity goldens") {
  const auto c813 = CirculantDigraph::make(8, 1, 3);
  const auto r813 = is_hamiltonian(c813, HamiltonMethod::CrossCheck);
  CHECK(r813.hamiltonian);
  CHECK(r813.methods_agree);
  REQUIRE(r813.cycle);
  CHECK(is_hamiltonian_cycle(c813, *r813.cycle));
  REQUIRE(r813.rankin_witness);
  const auto [i, j] = *r813.rankin_witness;
  CHECK(i + j == 2);
  CHECK(std::gcd(i + 3 * j, std::int64_t{8}) == 2);

  const auto r623 = is_hamiltonian(CirculantDigraph::make(6, 2, 3), HamiltonMethod::CrossCheck);
  CHECK_FALSE(r623.hamiltonian);
  CHECK(r623.methods_agree);
  CHECK(r623.verdicts.size() == 3);

  for (std::int64_t n = 1; n <= 7; ++n) {
    const auto r = is_hamiltonian(CirculantDigraph::make(n, 1, 1), HamiltonMethod::Rankin);
    CHECK(r.hamiltonian);
    REQUIRE(r.rankin_witness);
    CHECK(*r.rankin_witness == std::pair<std::int64_t, std::int64_t>{0, n});
  }
}

TEST_CASE("deciders agree with the permutation oracle") {
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        if (std::gcd(std::gcd(n, a), b) != 1) continue;
        const auto c = CirculantDigraph::make(n, a, b);
        const bool oracle = permutation_hamiltonian(n, a, b);
        for (auto m : {HamiltonMethod::Rankin, HamiltonMethod::Visibility, HamiltonMethod::BruteForce}) {
          const auto r = is_hamiltonian(c, m);
          CHECK(r.hamiltonian == oracle);
          if (r.cycle) CHECK(is_hamiltonian_cycle(c, *r.cycle));
        }
      }
}

TEST_CASE("decider errors") {
  CHECK_THROWS_AS(is_hamiltonian(CirculantDigraph::make(6, 2, 4), HamiltonMethod::Rankin), Error);
  CHECK_THROWS_AS(is_hamiltonian(CirculantDigraph::make(13, 1, 2), HamiltonMethod::BruteForce), Error);
  const auto big = is_hamiltonian(CirculantDigraph::make(101, 3, 7), HamiltonMethod::CrossCheck);
  CHECK(big.methods_agree);
  CHECK(big.verdicts.count(HamiltonMethod::BruteForce) == 0);
}

TEST_CASE("cycle checker") {
  const auto c = CirculantDigraph::make(5, 1, 2);
  CHECK(is_hamiltonian_cycle(c, {0, 1, 2, 3, 4}));
  CHECK(is_hamiltonian_cycle(c, {0, 2, 4, 1, 3}));
  CHECK_FALSE(is_hamiltonian_cycle(c, {0, 1, 2, 4}));
  CHECK_FALSE(is_hamiltonian_cycle(c, {0, 1, 3, 4, 2}));
  CHECK_FALSE(is_hamiltonian_cycle(c, {1, 2, 3, 4, 0}));
}
