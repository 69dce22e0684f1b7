#include "toricdimer/kasteleyn.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "toricdimer/error.hpp"

namespace toricdimer {

namespace {

// Dense GF(2) row: bits for the edge variables plus a right-hand side.
struct Gf2Row {
  std::vector<std::uint64_t> bits;
  bool rhs = false;

  bool test(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { bits[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void add(const Gf2Row& o) {
    for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
    rhs = rhs != o.rhs;
  }
};

}  // namespace

KasteleynSigning kasteleyn_signing(const TorusGraph& g) {
  const FaceSet fs = compute_faces(g);
  if (!fs.cellular) {
    std::ostringstream os;
    os << "V - E + F = " << fs.euler_characteristic;
    throw Error(Errc::NotCellular, os.str());
  }
  const auto n = static_cast<std::size_t>(g.num_edges());
  const std::size_t words = (n + 63) / 64;

  std::vector<Gf2Row> rows;
  rows.reserve(fs.faces.size());
  for (const auto& face : fs.faces) {
    Gf2Row row{std::vector<std::uint64_t>(words, 0), false};
    for (int d : face) row.flip(static_cast<std::size_t>(dart_edge(d)));
    // a "-" sign is bit 1; the product over a 2k-face must be (-1)^(k+1)
    const std::size_t half = face.size() / 2;
    row.rhs = (half + 1) % 2 == 1;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pr = rank;
    while (pr < rows.size() && !rows[pr].test(col)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col)) rows[r].add(rows[rank]);
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r].rhs) throw Error(Errc::Inconsistent, "face parity system has no solution");

  KasteleynSigning s{std::vector<int>(n, 1)};
  for (std::size_t r = 0; r < rank; ++r)
    if (rows[r].rhs) s.sign[pivot_col[r]] = -1;
  return s;
}

std::vector<int> signing_violations(const TorusGraph& g, const FaceSet& faces, const KasteleynSigning& s) {
  std::vector<int> bad;
  if (static_cast<int>(s.sign.size()) != g.num_edges()) {
    for (int f = 0; f < faces.num_faces(); ++f) bad.push_back(f);
    return bad;
  }
  for (int f = 0; f < faces.num_faces(); ++f) {
    const auto& face = faces.faces[static_cast<std::size_t>(f)];
    int product = 1;
    for (int d : face) product *= s.sign[static_cast<std::size_t>(dart_edge(d))];
    const int required = (face.size() / 2 + 1) % 2 == 0 ? 1 : -1;
    if (product != required) bad.push_back(f);
  }
  return bad;
}

OperatorMatrix::OperatorMatrix(int size)
    : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {}

OperatorMatrix operator_matrix(const TorusGraph& g, const KasteleynSigning& s) {
  if (!g.balanced()) throw Error(Errc::Unbalanced, "operator matrix needs num_white == num_black");
  OperatorMatrix m(g.num_white());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    m.at(ed.white, ed.black).add_term(ed.offset, s.sign[static_cast<std::size_t>(e)]);
  }
  return m;
}

namespace {

class Expansion {
 public:
  explicit Expansion(const OperatorMatrix& m) : m_(m) {}

  LaurentPoly2 minor(std::uint64_t used) {
    const int row = std::popcount(used);
    if (row == m_.size()) return LaurentPoly2::constant(1);
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    LaurentPoly2 acc;
    for (int col = 0; col < m_.size(); ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      if (used & bit) continue;
      const LaurentPoly2& entry = m_.at(row, col);
      if (entry.is_zero()) continue;
      const LaurentPoly2 sub = minor(used | bit);
      if (sub.is_zero()) continue;
      // inversions with the rows above: used columns to the right of col
      const int inversions = std::popcount(used >> col);
      if (inversions % 2 == 0)
        acc += entry * sub;
      else
        acc -= entry * sub;
    }
    memo_.emplace(used, acc);
    return acc;
  }

 private:
  const OperatorMatrix& m_;
  std::unordered_map<std::uint64_t, LaurentPoly2> memo_;
};

}  // namespace

LaurentPoly2 determinant_expansion(const OperatorMatrix& m) {
  if (m.size() > 63) throw Error(Errc::BadParameters, "expansion supports at most 63 rows");
  Expansion ex(m);
  return ex.minor(0);
}

LaurentPoly2 determinant_bareiss(const OperatorMatrix& input) {
  const int n = input.size();
  if (n == 0) return LaurentPoly2::constant(1);
  OperatorMatrix a = input;
  LaurentPoly2 prev = LaurentPoly2::constant(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!a.at(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return {};
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly2 num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num.exact_divide(prev);
      }
      a.at(i, k) = {};
    }
    prev = a.at(k, k);
  }
  LaurentPoly2 det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentPoly2 kasteleyn_polynomial(const TorusGraph& g, const KasteleynSigning& s) {
  if (!g.balanced()) throw Error(Errc::Unbalanced, "Kasteleyn operator needs num_white == num_black");
  const FaceSet fs = compute_faces(g);
  if (!signing_violations(g, fs, s).empty())
    throw Error(Errc::SigningMismatch, "signing violates the face parity rule");
  const OperatorMatrix m = operator_matrix(g, s);
  // expansion touches at most 2^n minors; beyond that elimination is cheaper
  if (m.size() <= 16) return determinant_expansion(m);
  return determinant_bareiss(m);
}

LaurentPoly2 kasteleyn_polynomial(const TorusGraph& g) {
  if (!g.balanced()) throw Error(Errc::Unbalanced, "Kasteleyn operator needs num_white == num_black");
  return kasteleyn_polynomial(g, kasteleyn_signing(g));
}

FourEvaluation count_from_four_evaluations(const LaurentPoly2& p, const BigInt& true_count) {
  FourEvaluation out;
  out.count = true_count;
  for (std::size_t k = 0; k < 4; ++k) out.values[k] = p.evaluate_at_signs(kSignPoints[k][0], kSignPoints[k][1]);
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> eps{};
    BigInt sum = 0;
    for (int k = 0; k < 4; ++k) {
      eps[static_cast<std::size_t>(k)] = (mask >> (3 - k)) & 1 ? -1 : 1;
      sum += eps[static_cast<std::size_t>(k)] * out.values[static_cast<std::size_t>(k)];
    }
    if (sum < 0) sum = -sum;
    if (sum == 2 * true_count) out.patterns.push_back(eps);
  }
  if (out.patterns.empty()) throw Error(Errc::NoPatternFound, "no sign pattern reproduces the matching count");
  return out;
}

}  // namespace toricdimer
