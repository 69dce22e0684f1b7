#pragma once

#include <map>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toricdimer/vec2.hpp"

namespace toricdimer {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse bivariate Laurent polynomial sum c_{ij} w^i z^j over Z.
/// Zero coefficients are never stored.
class LaurentPoly2 {
 public:
  using Terms = std::map<Vec2, BigInt>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const BigInt& c);
  static LaurentPoly2 monomial(const BigInt& c, Vec2 exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  BigInt coefficient(Vec2 exponent) const;

  /// Adds c * w^i z^j in place.
  void add_term(Vec2 exponent, const BigInt& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2 operator-() const;
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Exact quotient; throws Errc::NotDivisible when d does not divide *this.
  LaurentPoly2 exact_divide(const LaurentPoly2& d) const;

  /// P(s_w, s_z) for s_w, s_z in {+1, -1}.
  BigInt evaluate_at_signs(int s_w, int s_z) const;

  /// Exponents with nonzero coefficient, ascending.
  std::vector<Vec2> exponent_support() const;

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

 private:
  Terms terms_;
};

}  // namespace toricdimer
