#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toricdimer/vec2.hpp"

namespace toricdimer {

/// Rank-2 sublattice of Z^2 in Hermite normal form, generated by
/// (h11, 0) and (h21, h22) with h11, h22 > 0 and 0 <= h21 < h11.
class LatticeBasis {
 public:
  /// Throws Errc::BadParameters unless the triple is in normal form.
  LatticeBasis(std::int64_t h11, std::int64_t h21, std::int64_t h22);

  /// HNF of the lattice spanned by the given vectors; throws
  /// Errc::SingularMatrix when they do not span a rank-2 lattice.
  static LatticeBasis from_generators(std::span<const Vec2> generators);

  std::int64_t h11() const noexcept { return h11_; }
  std::int64_t h21() const noexcept { return h21_; }
  std::int64_t h22() const noexcept { return h22_; }
  Vec2 first() const noexcept { return {h11_, 0}; }
  Vec2 second() const noexcept { return {h21_, h22_}; }
  std::int64_t volume() const noexcept { return h11_ * h22_; }

  bool contains(Vec2 v) const noexcept;

  /// Canonical representative of v modulo the lattice, in
  /// [0, h11) x [0, h22), together with the lattice vector v - rep.
  struct Reduction {
    Vec2 representative;
    Vec2 lattice_vector;
  };
  Reduction reduce(Vec2 v) const noexcept;

  /// Coset representatives {(i, j) : 0 <= i < h11, 0 <= j < h22}, j-major.
  std::vector<Vec2> coset_representatives() const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  std::int64_t h11_;
  std::int64_t h21_;
  std::int64_t h22_;
};

/// Integer 2x2 matrix, row-major {{a, b}, {c, d}}.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const noexcept { return a * d - b * c; }
  Vec2 operator*(Vec2 v) const noexcept { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Vec2 column(int j) const noexcept { return j == 0 ? Vec2{a, c} : Vec2{b, d}; }
  /// Integer solution of M x = v, if one exists.
  std::optional<Vec2> solve(Vec2 v) const noexcept;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Every rank-2 sublattice of Z^2 with the given volume, in HNF order.
std::vector<LatticeBasis> sublattices_of_volume(std::int64_t volume);

}  // namespace toricdimer
