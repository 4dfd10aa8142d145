#include "quasilin/exact.hpp"

#include <algorithm>

namespace ql {

namespace {

Int binomial(long n, long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

}  // namespace

Int hadamard_subdet_bound(const IntMat& m, int size_cap) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const int kmax = static_cast<int>(std::min<Eigen::Index>(
      {rows, cols, static_cast<Eigen::Index>(size_cap)}));
  std::vector<Int> norms;
  norms.reserve(static_cast<size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) {
    Int n2(0);
    for (Eigen::Index j = 0; j < cols; ++j) n2 += m(i, j) * m(i, j);
    norms.push_back(n2);
  }
  std::sort(norms.begin(), norms.end(), [](const Int& a, const Int& b) { return a > b; });
  Int best(0);
  Int prod(1);
  for (int k = 1; k <= kmax; ++k) {
    prod *= norms[static_cast<size_t>(k - 1)];
    best = std::max(best, isqrt(prod));
  }
  return best;
}

SubdetBound max_abs_subdet(const IntMat& m, int size_cap, long budget) {
  if (size_cap < 1) throw DomainError("max_abs_subdet: size_cap must be >= 1");
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const int kmax = static_cast<int>(std::min<Eigen::Index>(
      {rows, cols, static_cast<Eigen::Index>(size_cap)}));
  Int total(0);
  for (int k = 1; k <= kmax; ++k) total += binomial(rows, k) * binomial(cols, k);
  if (total > budget) return SubdetBound{hadamard_subdet_bound(m, size_cap), false};

  Int best(0);
  IntMat sub;
  for (int k = 1; k <= kmax; ++k) {
    sub.resize(k, k);
    for_each_combination(static_cast<int>(rows), k, [&](const std::vector<int>& ri) {
      for_each_combination(static_cast<int>(cols), k, [&](const std::vector<int>& ci) {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(ri[static_cast<size_t>(i)], ci[static_cast<size_t>(j)]);
        Int d = det(sub);
        if (d < 0) d = -d;
        if (d > best) best = d;
      });
    });
  }
  return SubdetBound{best, true};
}

SubdetStats subdet_stats(const IntMat& a, const IntVec& b, const IntVec& c,
                         long budget) {
  const Eigen::Index s = a.rows(), r = a.cols();
  if (b.size() != s || c.size() != s) throw DomainError("subdet_stats: shape mismatch");
  IntMat ab(s, r + 1), abc(s, r + 2);
  ab.leftCols(r) = a;
  ab.col(r) = b;
  abc.leftCols(r + 1) = ab;
  abc.col(r + 1) = c;
  const int cap = static_cast<int>(std::max<Eigen::Index>(s, r + 2));
  SubdetBound d = max_abs_subdet(a, cap, budget);
  SubdetBound dp = max_abs_subdet(ab, cap, budget);
  SubdetBound dm = max_abs_subdet(abc, cap, budget);
  // clamp to 1: these sit in denominators of thresholds
  return SubdetStats{std::max(d.value, Int(1)), std::max(dp.value, Int(1)),
                     std::max(dm.value, Int(1)), d.exact && dp.exact && dm.exact};
}

Int gcd_list(const std::vector<Int>& xs) {
  if (xs.empty()) throw DomainError("gcd_list: empty list");
  Int g(0);
  for (const Int& x : xs) {
    if (x <= 0) throw DomainError("gcd_list: entries must be positive");
    g = gcd(g, x);
  }
  return g;
}

}  // namespace ql
