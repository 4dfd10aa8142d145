#include "quasilin/linalg.hpp"

namespace ql {

Int det_bareiss(IntMat m) {
  if (m.rows() != m.cols()) throw DomainError("det: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Int(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // exact by the Bareiss identity
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw DomainError("det: matrix not square");
  if (m.rows() <= 4) return det_cofactor<Int>(m);
  return det_bareiss(m);
}

int rank(RatMat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rk = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = row;
    while (piv < rows && m(piv, col).sign() == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Rat inv = Rat(1) / m(row, col);
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (m(i, col).sign() == 0) continue;
      const Rat f = m(i, col) * inv;
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    ++row;
    ++rk;
  }
  return rk;
}

int rank_over_Q(const IntMat& m) { return rank(to_rat(m)); }

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve_square: shape mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && a(piv, col).sign() == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      std::swap(b(piv), b(col));
    }
    const Rat inv = Rat(1) / a(col, col);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || a(i, col).sign() == 0) continue;
      const Rat f = a(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b(i) -= f * b(col);
    }
  }
  RatVec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
  return x;
}

std::optional<RatVec> kernel_direction(const RatMat& rows) {
  const Eigen::Index r = rows.cols();
  RatMat m = rows;
  const Eigen::Index nr = m.rows();
  // reduce to row echelon, remembering pivot columns
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r && row < nr; ++col) {
    Eigen::Index piv = row;
    while (piv < nr && m(piv, col).sign() == 0) ++piv;
    if (piv == nr) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Rat inv = Rat(1) / m(row, col);
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (i == row || m(i, col).sign() == 0) continue;
      const Rat f = m(i, col) * inv;
      for (Eigen::Index j = col; j < r; ++j) m(i, j) -= f * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<Eigen::Index>(pivot_col.size()) != r - 1) return std::nullopt;
  // the single free column determines the kernel vector
  std::vector<bool> is_pivot(r, false);
  for (Eigen::Index c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  Eigen::Index free_col = -1;
  for (Eigen::Index c = 0; c < r; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_col = c;
  RatVec v = RatVec::Constant(r, Rat(0));
  v(free_col) = Rat(1);
  for (size_t i = 0; i < pivot_col.size(); ++i) {
    const Eigen::Index pc = pivot_col[i];
    v(pc) = -m(static_cast<Eigen::Index>(i), free_col) / m(static_cast<Eigen::Index>(i), pc);
  }
  return v;
}

}  // namespace ql
