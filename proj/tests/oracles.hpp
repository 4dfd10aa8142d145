#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: Laplace-expansion determinants, exhaustive submatrix enumeration,
// and direct lattice scans. Frozen expected values in the suites were
// produced by these.

#include <random>
#include <vector>

#include "quasilin/ip.hpp"
#include "quasilin/types.hpp"

namespace oracle {

using ql::Int;
using ql::IntMat;
using ql::IntVec;
using ql::Rat;

// Laplace expansion along the last column (the library expands along the
// first row and eliminates via Bareiss).
inline Int det_naive(const IntMat& m) {
  const Eigen::Index k = m.rows();
  if (k == 0) return Int(1);
  if (k == 1) return m(0, 0);
  Int acc(0);
  IntMat sub(k - 1, k - 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    Eigen::Index rr = 0;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (r == i) continue;
      for (Eigen::Index c = 0; c + 1 < k; ++c) sub(rr, c) = m(r, c);
      ++rr;
    }
    Int term = m(i, k - 1) * det_naive(sub);
    if ((i + k - 1) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Maximum |det| over every square submatrix, by direct enumeration.
inline Int max_subdet_naive(const IntMat& m) {
  Int best(0);
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  const int kmax = std::min(rows, cols);
  for (int k = 1; k <= kmax; ++k) {
    IntMat sub(k, k);
    ql::for_each_combination(rows, k, [&](const std::vector<int>& ri) {
      ql::for_each_combination(cols, k, [&](const std::vector<int>& ci) {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub(i, j) = m(ri[static_cast<size_t>(i)], ci[static_cast<size_t>(j)]);
        Int d = det_naive(sub);
        if (d < 0) d = -d;
        if (d > best) best = d;
      });
    });
  }
  return best;
}

// Exhaustive integer optimum of max{d.x : A x <= n b + c, 0 <= x <= box}.
// Only valid when the feasible integer set lies inside the box.
inline ql::OptValue ip_by_enumeration(const ql::ParamIP& pip, long n, long box) {
  const int r = pip.r();
  IntVec x = IntVec::Constant(r, Int(0));
  std::optional<Rat> best;
  std::optional<ql::RatVec> arg;
  while (true) {
    bool ok = true;
    for (Eigen::Index i = 0; i < pip.A.rows() && ok; ++i) {
      Int lhs(0);
      for (int j = 0; j < r; ++j) lhs += pip.A(i, j) * x(j);
      if (lhs > Int(n) * pip.b(i) + pip.c(i)) ok = false;
    }
    if (ok) {
      Rat val(0);
      for (int j = 0; j < r; ++j) val += Rat(pip.d(j)) * Rat(x(j));
      if (!best || val > *best) {
        best = val;
        arg = ql::to_rat(x);
      }
    }
    int j = r - 1;
    while (j >= 0 && x(j) == box) {
      x(j) = 0;
      --j;
    }
    if (j < 0) break;
    x(j) += 1;
  }
  if (!best) return ql::OptValue::neg_infinity();
  return ql::OptValue::finite(*best, arg);
}

// Deterministic small instances for the structural property suites:
// r <= 3, s <= 4, all entries in [-3, 3], base polyhedron full-dimensional,
// finite linear optimum, and a small-enough D for desk-scale enumeration.
inline std::vector<ql::ParamIP> random_instances(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> rdist(2, 3), sdist(2, 4);
  std::vector<ql::ParamIP> out;
  while (static_cast<int>(out.size()) < count) {
    const int r = rdist(rng), s = sdist(rng);
    IntMat a(s, r);
    IntVec b(s), c(s), d(r);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < r; ++j) a(i, j) = entry(rng);
      b(i) = entry(rng);
      c(i) = entry(rng);
    }
    for (int j = 0; j < r; ++j) d(j) = entry(rng);
    ql::ParamIP pip(a, b, c, d);
    try {
      const ql::Polyhedron base = pip.base_polyhedron();
      if (!ql::is_full_dimensional(base).full_dimensional) continue;
      if (!ql::solve_lp(base, ql::to_rat(d)).is_finite()) continue;
      out.push_back(std::move(pip));
    } catch (const ql::Error&) {
      continue;
    }
  }
  return out;
}

}  // namespace oracle
