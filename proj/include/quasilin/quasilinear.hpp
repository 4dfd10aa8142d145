#pragma once

#include <optional>
#include <vector>

#include "quasilin/exact.hpp"
#include "quasilin/ip.hpp"

namespace ql {

// value(n) = slope*n + intercepts[n mod period] for every n >= onset; an
// absent intercept marks a residue class that is infeasible throughout the
// validated range.
struct QuasiLinearLaw {
  Rat slope;
  long period = 1;
  std::vector<std::optional<Rat>> intercepts;
  long onset = 0;

  // Predicted value at n, nullopt on an undefined class.
  std::optional<Rat> predict(long n) const {
    const auto& beta = intercepts[static_cast<size_t>(n % period)];
    if (!beta) return std::nullopt;
    return slope * Rat(n) + *beta;
  }
};

// The index set {n < cap : the pure program is feasible and attains slope
// phi exactly}, its gcd delta, and Schur's bound on the Frobenius number of
// the members.
struct JMaxInfo {
  std::vector<long> members;
  Int cap;
  Int delta;
  Int frobenius_bound;
};

// Enumerates the pure (c = 0) program up to the cap (default (r+1)*D').
// A cap below the default makes delta only a multiple of the true value;
// callers overriding downward own that caveat.
JMaxInfo jmax_and_delta(const ParamIP& pip, std::optional<Int> cap_override = std::nullopt);

// (r+1) D' (D-1) + (r+2) Delta - D from the subdeterminant statistics of
// A, [A b], [A b c]. Bound-flavored statistics yield a valid, larger value.
Int n_star(const ParamIP& pip);
Int n_star_from_stats(const SubdetStats& stats, int r);

// Fits the minimal validating period from the tail of a sweep and scans
// backward for the earliest onset. Candidates are tried smallest first; a
// candidate must have at least three full periods inside the range past its
// onset and must reproduce the trailing `validation_window` points exactly.
QuasiLinearLaw detect_law(const IpSweep& sweep,
                          const std::vector<long>& period_candidates,
                          int validation_window,
                          const std::optional<Rat>& asserted_slope = std::nullopt);

// Divisors of delta in ascending order followed by its small multiples.
std::vector<long> default_period_candidates(const Int& delta, int multiple_cap = 4);

struct LinearityCriterion {
  Int delta;
  bool m_linear = false;
  bool M_linear_guaranteed = false;
};

// The pure optimum is eventually linear iff delta == 1; delta == 1 also
// forces the relaxed optimum linear (one direction only).
LinearityCriterion linearity_criterion(const ParamIP& pip);

// membership[k] says whether k lies in the numerical semigroup generated by
// the given positive integers (0 always does).
std::vector<bool> semigroup_membership(const std::vector<long>& gens, long up_to);

}  // namespace ql
