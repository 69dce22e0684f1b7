#include "toricdimer/lattice.hpp"

#include <sstream>

#include "toricdimer/error.hpp"

namespace toricdimer {

LatticeBasis::LatticeBasis(std::int64_t h11, std::int64_t h21, std::int64_t h22)
    : h11_(h11), h21_(h21), h22_(h22) {
  if (h11 <= 0 || h22 <= 0 || h21 < 0 || h21 >= h11) {
    std::ostringstream os;
    os << "(" << h11 << ", " << h21 << ", " << h22 << ") is not a Hermite normal form";
    throw Error(Errc::BadParameters, os.str());
  }
}

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 and s, t with s a + t b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace

LatticeBasis LatticeBasis::from_generators(std::span<const Vec2> generators) {
  // Row-reduce on the y coordinate: collapse all generators to one vector
  // (p, g) with g = gcd of y's, plus vectors on the x axis.
  Vec2 pivot{0, 0};
  std::int64_t axis = 0;  // gcd of x-axis vectors
  for (Vec2 v : generators) {
    if (v.y == 0) {
      axis = std::gcd(axis, v.x < 0 ? -v.x : v.x);
      continue;
    }
    if (pivot.y == 0) {
      pivot = v;
      continue;
    }
    std::int64_t s = 0, t = 0;
    const std::int64_t g = ext_gcd(pivot.y, v.y, s, t);
    const Vec2 combined = s * pivot + t * v;  // y = g
    const Vec2 left = (v.y / g) * pivot - (pivot.y / g) * v;  // y = 0
    axis = std::gcd(axis, left.x < 0 ? -left.x : left.x);
    pivot = combined;
  }
  if (pivot.y == 0 || axis == 0) throw Error(Errc::SingularMatrix, "generators do not span a rank-2 lattice");
  if (pivot.y < 0) pivot = -pivot;
  return LatticeBasis(axis, floor_mod(pivot.x, axis), pivot.y);
}

bool LatticeBasis::contains(Vec2 v) const noexcept {
  if (v.y % h22_ != 0) return false;
  const std::int64_t t = v.y / h22_;
  return (v.x - t * h21_) % h11_ == 0;
}

LatticeBasis::Reduction LatticeBasis::reduce(Vec2 v) const noexcept {
  const std::int64_t t = floor_div(v.y, h22_);
  const std::int64_t x1 = v.x - t * h21_;
  const std::int64_t s = floor_div(x1, h11_);
  const Vec2 lattice_vec = t * second() + s * first();
  return {v - lattice_vec, lattice_vec};
}

std::vector<Vec2> LatticeBasis::coset_representatives() const {
  std::vector<Vec2> reps;
  reps.reserve(static_cast<std::size_t>(volume()));
  for (std::int64_t j = 0; j < h22_; ++j)
    for (std::int64_t i = 0; i < h11_; ++i) reps.push_back({i, j});
  return reps;
}

std::optional<Vec2> Mat2::solve(Vec2 v) const noexcept {
  const std::int64_t dt = det();
  if (dt == 0) return std::nullopt;
  // adj(M) v / det
  const std::int64_t x = d * v.x - b * v.y;
  const std::int64_t y = -c * v.x + a * v.y;
  if (x % dt != 0 || y % dt != 0) return std::nullopt;
  return Vec2{x / dt, y / dt};
}

std::vector<LatticeBasis> sublattices_of_volume(std::int64_t volume) {
  std::vector<LatticeBasis> out;
  for (std::int64_t h11 = 1; h11 <= volume; ++h11) {
    if (volume % h11 != 0) continue;
    for (std::int64_t h21 = 0; h21 < h11; ++h21) out.emplace_back(h11, h21, volume / h11);
  }
  return out;
}

}  // namespace toricdimer
