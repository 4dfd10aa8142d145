#include "quasilin/types.hpp"

namespace ql {

RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

IntMat int_mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = Int(x);
    ++i;
  }
  return m;
}

IntVec int_vec(std::initializer_list<long> entries) {
  IntVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long x : entries) v(i++) = Int(x);
  return v;
}

RatVec rat_vec(std::initializer_list<Rat> entries) {
  RatVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rat& x : entries) v(i++) = x;
  return v;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

bool vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool mat_eq(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntVec primitive_integer_direction(const RatVec& v) {
  Int lcm_den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Int d = v(i).den();
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  IntVec out(v.size());
  Int content(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = v(i).num() * (lcm_den / v(i).den());
    content = gcd(content, out(i));
  }
  if (content > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= content;
  return out;
}

}  // namespace ql
