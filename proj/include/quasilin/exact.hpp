#pragma once

#include <vector>

#include "quasilin/linalg.hpp"
#include "quasilin/types.hpp"

namespace ql {

// Result of a maximal-subdeterminant query. When `exact` is false the value
// is the Hadamard upper bound instead of the true maximum; every consumer of
// these statistics is monotone, so a valid upper bound keeps all derived
// thresholds valid.
struct SubdetBound {
  Int value;
  bool exact = true;
};

// D, D', Delta of the matrices A, [A b], [A b c]. Fields are clamped to >= 1
// so they can sit in denominators of the bounds they feed.
struct SubdetStats {
  Int D;
  Int Dprime;
  Int DeltaMax;
  bool exact = true;
};

inline constexpr long kDefaultSubdetBudget = 1'000'000;

// Maximum absolute value of all k x k subdeterminants, k <= size_cap.
// Degrades to the Hadamard bound once more than `budget` submatrices would
// have to be enumerated.
SubdetBound max_abs_subdet(const IntMat& m, int size_cap,
                           long budget = kDefaultSubdetBudget);

// floor(sqrt(product of the k largest row norms squared)), maximised over
// k <= size_cap. An upper bound for every k x k subdeterminant.
Int hadamard_subdet_bound(const IntMat& m, int size_cap);

SubdetStats subdet_stats(const IntMat& a, const IntVec& b, const IntVec& c,
                         long budget = kDefaultSubdetBudget);

// gcd of a nonempty list of positive integers.
Int gcd_list(const std::vector<Int>& xs);

}  // namespace ql
