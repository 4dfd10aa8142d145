#pragma once

#include <vector>

#include "quasilin/lp.hpp"
#include "quasilin/types.hpp"

namespace ql {

// The family max{d.x : A x <= n b + c, x in N^r} indexed by n.
struct ParamIP {
  IntMat A;
  IntVec b;
  IntVec c;
  IntVec d;

  ParamIP(IntMat a, IntVec b_, IntVec c_, IntVec d_);
  int r() const { return static_cast<int>(A.cols()); }
  int s() const { return static_cast<int>(A.rows()); }
  Polyhedron base_polyhedron() const;          // {A x <= b, x >= 0}
  Polyhedron relaxation(const Int& n) const;   // {A x <= n b + c, x >= 0}
};

struct IpSweep {
  long n_lo = 0;
  long n_hi = -1;
  std::vector<OptValue> values;  // index n - n_lo

  const OptValue& at(long n) const { return values.at(static_cast<size_t>(n - n_lo)); }
  long size() const { return n_hi - n_lo + 1; }
};

// Exact optimum of the integer program at index n. Finite values carry an
// integral witness (deterministic: depth-first branch and bound, lower
// branch first, strict-improvement incumbent). Unbounded relaxations are
// boxed by the proximity radius r*D around the vertex hull before the
// search, which keeps the optimum and feasibility unchanged.
OptValue solve_ip(const ParamIP& pip, const Int& n);

IpSweep sweep(const ParamIP& pip, long n_lo, long n_hi);

// Feasibility threshold of the relaxed family: the integer program is
// feasible for every n >= kappa. Requires the base polyhedron to be
// full-dimensional.
Int kappa(const ParamIP& pip);

}  // namespace ql
