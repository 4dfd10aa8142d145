#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quasilin/monomial.hpp"
#include "quasilin/quasilinear.hpp"
#include "quasilin/simplicial.hpp"

namespace ql {

enum class PowerVariant { Closure, Symbolic };

// Everything fixed about the family {J_n}: the ideal, its radical complex,
// and the facet rows (a_i, b_i) shared by all the degree-selection programs.
// For the symbolic variant the rows are the prime indicator vectors with
// offset 1.
struct IdealPowers {
  PowerVariant variant;
  MonomialIdeal ideal;
  SimplicialComplex delta;  // radical complex of the ideal
  std::optional<NewtonPolyhedron> np;
  std::optional<SquareFreeIdeal> sf;
  int dim_quotient = 0;  // max facet size of the radical complex

  struct Row {
    IntVec a;
    Int b;
    uint32_t support;
  };
  std::vector<Row> rows;

  static IdealPowers closure(MonomialIdeal ideal);
  static IdealPowers symbolic(MonomialIdeal ideal);
  int vars() const { return ideal.vars; }
};

// Memoizing wrapper around reduced_homology_dim keyed on the facet list.
class HomologyCache {
 public:
  int dim(const SimplicialComplex& c, int k);

 private:
  std::map<std::pair<std::vector<uint32_t>, int>, int> memo_;
};

// The multidegree-selection complex of the closure of the n-th power at
// degree alpha. Requires supp^-(alpha) to be a face of the radical complex.
SimplicialComplex delta_alpha_closure(const NewtonPolyhedron& np,
                                      const SimplicialComplex& delta,
                                      const Int& n, const IntVec& alpha);

// Symbolic-power analog built from the facets of the radical complex.
SimplicialComplex delta_alpha_symbolic(const SquareFreeIdeal& sf, const Int& n,
                                       const IntVec& alpha);

// Local cohomology dimension in multidegree alpha: the reduced homology of
// the selection complex shifted by |supp^-(alpha)| + 1, zero when the
// negative support is not a face.
int takayama_dim(const IdealPowers& powers, const Int& n, int i,
                 const IntVec& alpha, HomologyCache& cache);

// One family of degrees alpha sharing a negative support, an exact set of
// strict rows and the complementary set of lower-bounded rows. Distinct
// candidates may generate the same complex; all are kept.
struct GammaCandidate {
  uint32_t supp_neg = 0;
  std::vector<int> active_le;
  std::vector<int> active_ge;
  SimplicialComplex gamma;
  int r_prime = 0;
};

std::vector<GammaCandidate> enumerate_gamma_candidates(const IdealPowers& powers,
                                                       long cap = 200000);

// Optimum of the candidate's degree-selection integer program at index n
// (no homology gate, no dimension shift).
OptValue gamma_ip_value(const IdealPowers& powers, const GammaCandidate& cand,
                        const Int& n);

// sup{|alpha| : alpha in the candidate's degree family} + r' - r when the
// shifted homology of gamma is nonzero, -inf otherwise.
OptValue a_gamma_i(const IdealPowers& powers, const GammaCandidate& cand,
                   const Int& n, int i, HomologyCache& cache);

struct CohomologyReport {
  Int n;
  std::vector<std::optional<Int>> a;  // index i in 0..dim_quotient; nullopt = -inf
  Int reg;                            // max(a_i + i) over the finite entries
};

// a_i over all candidates via the integer-program route.
CohomologyReport a_invariants(const IdealPowers& powers, const Int& n);

// Independent route: scan a degree box, build each selection complex from
// the localization-membership definition, and maximize |alpha| over nonzero
// homology. boundary_attained flags a maximum sitting on the box boundary
// (enlarge and rerun).
struct OracleReport {
  CohomologyReport report;
  bool boundary_attained = false;
  std::vector<std::optional<IntVec>> witnesses;
};

OracleReport oracle_a_invariants(const IdealPowers& powers, const Int& n,
                                 const IntVec& box_low, const IntVec& box_high);

// The documented default box: low = -r, high = n*d(I)*r + 2 r^2 D where D is
// the maximal subdeterminant over the candidate programs.
std::pair<IntVec, IntVec> default_oracle_box(const IdealPowers& powers, const Int& n);

// Doubles the box until the maximum leaves the boundary.
OracleReport oracle_a_invariants_adaptive(const IdealPowers& powers, const Int& n,
                                          const Int& initial_high,
                                          const Int& max_high);

struct TheoreticalBounds {
  Int n_dagger;     // ceil(2 r^(2+3r/2) d(I)^(3r^2))
  Int regst_bound;  // (r+1)(r+2) r^r d(I)^(2r^2)
  Int sym_bound;    // ceil(2 r^(2+3r/2))
};

TheoreticalBounds theoretical_bounds(int r, const Int& dI);

struct StabilityReport {
  PowerVariant variant;
  long n_lo = 0, n_hi = 0;
  std::vector<CohomologyReport> table;
  std::vector<std::optional<QuasiLinearLaw>> a_laws;  // nullopt: -inf throughout
  QuasiLinearLaw reg_law;                             // law of reg(R/J_n)
  // (p, e) with reg(J_n) = p n + e, available when the reg law is linear.
  std::optional<std::pair<Int, Int>> reg_linear;
  long empirical_onset = 0;
  TheoreticalBounds bounds;
  Int d_hat;  // max subdeterminant over candidate programs
};

// Sweeps a_invariants, detects the per-index laws and the regularity law,
// computes the closed-form bounds, and validates the slope/intercept and
// sandwich constraints the theory imposes.
StabilityReport stability_report(const IdealPowers& powers, long n_lo, long n_hi);

}  // namespace ql
