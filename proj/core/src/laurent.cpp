#include "toricdimer/laurent.hpp"

#include "toricdimer/error.hpp"

namespace toricdimer {

LaurentPoly2 LaurentPoly2::constant(const BigInt& c) { return monomial(c, {0, 0}); }

LaurentPoly2 LaurentPoly2::monomial(const BigInt& c, Vec2 exponent) {
  LaurentPoly2 p;
  p.add_term(exponent, c);
  return p;
}

BigInt LaurentPoly2::coefficient(Vec2 exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly2::add_term(Vec2 exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::exact_divide(const LaurentPoly2& d) const {
  if (d.is_zero()) throw Error(Errc::NotDivisible, "division by the zero polynomial");
  LaurentPoly2 quotient;
  if (is_zero()) return quotient;
  // Lexicographic division: any quotient term exponent is bounded below by
  // trail(*this) - trail(d), which bounds the loop for non-divisible input.
  const auto& [d_lead_exp, d_lead] = *d.terms_.rbegin();
  const Vec2 floor_exp = terms_.begin()->first - d.terms_.begin()->first;
  LaurentPoly2 rem = *this;
  while (!rem.is_zero()) {
    const auto& [r_exp, r_coef] = *rem.terms_.rbegin();
    const Vec2 q_exp = r_exp - d_lead_exp;
    if (q_exp < floor_exp || r_coef % d_lead != 0)
      throw Error(Errc::NotDivisible, "polynomial division leaves a remainder");
    const LaurentPoly2 step = monomial(r_coef / d_lead, q_exp);
    quotient += step;
    rem -= step * d;
  }
  return quotient;
}

BigInt LaurentPoly2::evaluate_at_signs(int s_w, int s_z) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    const bool neg_w = s_w < 0 && (e.x % 2 != 0);
    const bool neg_z = s_z < 0 && (e.y % 2 != 0);
    if (neg_w != neg_z)
      sum -= c;
    else
      sum += c;
  }
  return sum;
}

std::vector<Vec2> LaurentPoly2::exponent_support() const {
  std::vector<Vec2> out;
  out.reserve(terms_.size());
  for (const auto& kv : terms_) out.push_back(kv.first);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    const bool unit = mag == 1 && !is_zero(e);
    if (!unit) os << mag;
    if (e.x != 0) os << "w" << (e.x != 1 ? "^" + std::to_string(e.x) : "");
    if (e.y != 0) os << "z" << (e.y != 1 ? "^" + std::to_string(e.y) : "");
  }
  return os;
}

}  // namespace toricdimer
