#pragma once

#include <array>
#include <vector>

#include "toricdimer/laurent.hpp"
#include "toricdimer/torus_graph.hpp"

namespace toricdimer {

/// +1 / -1 per edge such that every face of length 2k has sign product (-1)^(k+1).
struct KasteleynSigning {
  std::vector<int> sign;

  friend bool operator==(const KasteleynSigning&, const KasteleynSigning&) = default;
};

/// Solves the face-parity system over GF(2); free edges get +1.
/// Throws MissingRotation, NotCellular, or Inconsistent (malformed faces).
KasteleynSigning kasteleyn_signing(const TorusGraph& g);

/// Faces whose sign product violates the parity rule (empty when admissible).
std::vector<int> signing_violations(const TorusGraph& g, const FaceSet& faces, const KasteleynSigning& s);

/// Square matrix of Laurent polynomials, rows = white vertices, columns = black.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(int size = 0);

  int size() const noexcept { return size_; }
  const LaurentPoly2& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * size_ + col)];
  }
  LaurentPoly2& at(int row, int col) { return entries_[static_cast<std::size_t>(row * size_ + col)]; }

 private:
  int size_;
  std::vector<LaurentPoly2> entries_;
};

/// Entry (w, b) = sum over edges e = (w, b) of sign(e) w^dx z^dy.
OperatorMatrix operator_matrix(const TorusGraph& g, const KasteleynSigning& s);

/// Exact determinant by first-row expansion over nonzero entries, memoising
/// minors on the set of used columns. Intended for at most ~20 rows.
LaurentPoly2 determinant_expansion(const OperatorMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination over Z[w^+-1, z^+-1].
LaurentPoly2 determinant_bareiss(const OperatorMatrix& m);

/// Determinant of the signed operator matrix. Global sign is whatever the
/// row order produces. Throws Unbalanced or SigningMismatch.
LaurentPoly2 kasteleyn_polynomial(const TorusGraph& g, const KasteleynSigning& s);

/// Same, with the signing computed by kasteleyn_signing.
LaurentPoly2 kasteleyn_polynomial(const TorusGraph& g);

/// Sign points in the order used by FourEvaluation::values.
inline constexpr std::array<std::array<int, 2>, 4> kSignPoints{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};

struct FourEvaluation {
  std::array<BigInt, 4> values;                // P at kSignPoints
  std::vector<std::array<int, 4>> patterns;    // every eps with |sum eps_k P_k| / 2 == count
  BigInt count;
};

/// Throws NoPatternFound when none of the 16 sign patterns reproduces true_count.
FourEvaluation count_from_four_evaluations(const LaurentPoly2& p, const BigInt& true_count);

}  // namespace toricdimer
