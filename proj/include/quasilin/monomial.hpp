#pragma once

#include <cstdint>
#include <vector>

#include "quasilin/simplicial.hpp"
#include "quasilin/types.hpp"

namespace ql {

// Monomial ideal given by its minimal monomial generating set (exponent
// vectors). dI is the maximal total degree among the generators.
struct MonomialIdeal {
  int vars = 0;
  std::vector<IntVec> gens;
  Int dI;

  static MonomialIdeal make(int vars, std::vector<IntVec> gens);
};

// Divisibility-minimal generating set of the ideal spanned by `gens`.
MonomialIdeal minimalize(int vars, std::vector<IntVec> gens);

// The complex of square-free monomials outside the radical: F is a face iff
// no generator's support is contained in F.
SimplicialComplex radical_complex(const MonomialIdeal& ideal);

// Facet a.x >= b of the Newton polyhedron, a in N^r, b a positive integer,
// gcd of the entries of (a, b) equal 1.
struct NewtonFacet {
  IntVec a;
  Int b;
  int support_size = 0;
};

struct NewtonPolyhedron {
  int vars = 0;
  Int dI;  // carried along for default generator caps
  std::vector<NewtonFacet> facets;
};

// Facets of conv(gens) + R_+^r via hyperplanes through affinely independent
// generator subsets parallel to complementary coordinate directions. Pure
// coordinate facets x_j >= 0 are implicit and never listed.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

// alpha in n * NP(I), i.e. a.alpha >= n*b for every facet.
bool in_closure_power(const NewtonPolyhedron& np, const Int& n, const IntVec& alpha);

// Divisibility-minimal lattice points of n*NP(I) inside [0, degree_cap]^r;
// with an adequate cap this is the minimal generating set of the closure of
// the n-th power. Errors when the cap is clearly inadequate (below n*dI or
// touched by a minimal point).
std::vector<IntVec> closure_power_generators(const NewtonPolyhedron& np,
                                             const Int& n, const Int& degree_cap);

// Square-free monomial ideal together with its minimal primes (variable
// subsets, stored as masks). The primes are the complements of the facets of
// the radical complex.
struct SquareFreeIdeal {
  MonomialIdeal base;
  std::vector<uint32_t> primes;

  static SquareFreeIdeal make(MonomialIdeal base);
};

// alpha in the n-th symbolic power: every prime's coordinate sum is >= n.
bool symbolic_membership(const SquareFreeIdeal& sf, const Int& n, const IntVec& alpha);

// Minimal generating set of the n-th symbolic power (every minimal generator
// has coordinates <= n).
std::vector<IntVec> symbolic_generators(const SquareFreeIdeal& sf, const Int& n);

}  // namespace ql
