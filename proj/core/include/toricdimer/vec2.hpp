#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace toricdimer {

/// Integer pair in Z^2. Ordered lexicographically by (x, y).
struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr Vec2& operator+=(Vec2 o) noexcept {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) noexcept {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return a -= b; }
  friend constexpr Vec2 operator-(Vec2 a) noexcept { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(std::int64_t k, Vec2 a) noexcept { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) noexcept = default;
  friend constexpr auto operator<=>(Vec2, Vec2) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, Vec2 v) {
    return os << '(' << v.x << ',' << v.y << ')';
  }
};

/// Homology class of a cycle on the torus, or a height-change vector.
using HomologyVector = Vec2;

/// gcd(|x|, |y|) with gcd(x, 0) = |x|.
constexpr std::int64_t content(Vec2 v) noexcept {
  return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
}

constexpr bool is_zero(Vec2 v) noexcept { return v.x == 0 && v.y == 0; }

/// Visibility in Z^2: the origin, or a point with coprime coordinates.
constexpr bool visible_in_z2(Vec2 v) noexcept { return is_zero(v) || content(v) == 1; }

constexpr std::int64_t cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }

/// Rotation by a quarter turn: (a, b) -> (-b, a).
constexpr Vec2 rot90(Vec2 v) noexcept { return {-v.y, v.x}; }

/// Floor division for signed operands, den > 0.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) noexcept {
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t num, std::int64_t den) noexcept {
  return num - floor_div(num, den) * den;
}

}  // namespace toricdimer
