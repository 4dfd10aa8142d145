#pragma once

#include <Eigen/Core>
#include <optional>

#include "quasilin/errors.hpp"
#include "quasilin/types.hpp"

namespace ql {

// Direct cofactor expansion; exact for any commutative scalar. Intended for
// k <= 4 where it beats elimination on tiny exact entries.
template <typename Scalar>
Scalar det_cofactor(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  const Eigen::Index k = m.rows();
  if (k == 0) return Scalar(1);
  if (k == 1) return m(0, 0);
  if (k == 2) return Scalar(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  Scalar acc(0);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(k - 1, k - 1);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index r = 1; r < k; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < k; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    Scalar term = Scalar(m(0, j) * det_cofactor(sub));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Bareiss fraction-free elimination. All intermediate divisions are exact
// over an integral domain, so integer input never leaves the integers.
Int det_bareiss(IntMat m);

// Cofactor path for k <= 4, Bareiss beyond. Throws DomainError on non-square
// input.
Int det(const IntMat& m);

// Rank over Q by exact Gaussian elimination.
int rank(RatMat m);
int rank_over_Q(const IntMat& m);

// Solves a square rational system exactly; nullopt when singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// For a k x r matrix of rank r-1 returns a spanning vector of the kernel;
// nullopt when the rank is not r-1.
std::optional<RatVec> kernel_direction(const RatMat& rows);

}  // namespace ql
