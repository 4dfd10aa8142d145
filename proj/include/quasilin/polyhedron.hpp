#pragma once

#include <optional>
#include <vector>

#include "quasilin/types.hpp"

namespace ql {

// {x in R^r | A x <= b, x >= 0}. The nonnegativity constraints are implicit
// and never stored in A.
class Polyhedron {
 public:
  Polyhedron(RatMat a, RatVec b);
  static Polyhedron from_int(const IntMat& a, const IntVec& b);

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index dim() const { return a_.cols(); }
  const RatMat& A() const { return a_; }
  const RatVec& b() const { return b_; }

 private:
  RatMat a_;
  RatVec b_;
};

// conv(vertices) + cone(rays). Rays are primitive integer vectors (content 1),
// vertices deduplicated and sorted lexicographically.
struct VRep {
  std::vector<RatVec> vertices;
  std::vector<IntVec> rays;
};

// A strict interior point gamma with its minimal structural slack and the
// threshold N_gamma for relaxed feasibility.
struct InteriorWitness {
  RatVec gamma;
  Rat eps_gamma;
  Rat N_gamma;
};

struct FullDimResult {
  bool full_dimensional = false;
  std::optional<InteriorWitness> witness;
};

// All basic feasible solutions (vertices) and extreme rays of the recession
// cone. An empty polyhedron yields no vertices; rays describe the recession
// cone of the constraint system regardless.
VRep enumerate_vrep(const Polyhedron& p);

// True iff r+1 affinely independent points exist among {vertex + ray}. On
// success the witness carries the barycenter of one such set; N_gamma uses
// the caller's c-vector when supplied, otherwise 1.
FullDimResult is_full_dimensional(const Polyhedron& p,
                                  const std::optional<RatVec>& c = std::nullopt);

// Minimal positive slack over all (vertex + single ray) points. Throws
// DegenerateInputError when no slack is positive. For integral data the
// result is checked against the 1/D^2 lower bound.
Rat epsilon_zero(const Polyhedron& p, const VRep& v);

// {A x <= n b + c, x >= 0}.
Polyhedron scale_and_relax(const Polyhedron& p, const Int& n, const RatVec& c);

bool contains(const Polyhedron& p, const RatVec& x);

}  // namespace ql
