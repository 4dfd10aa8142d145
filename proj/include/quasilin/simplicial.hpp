#pragma once

#include <cstdint>
#include <vector>

#include "quasilin/types.hpp"

namespace ql {

// Simplicial complex on a vertex universe {0,...,vertex_count-1}, stored by
// its maximal faces as bitmasks. The void complex (no faces at all) is
// distinct from {emptyset} (facets == {0}).
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<uint32_t> facets;  // maximal, deduplicated, ascending masks
  bool is_void = true;

  static SimplicialComplex void_complex(int vertices);
  // Maximalizes the list; an empty list yields the void complex.
  static SimplicialComplex from_facets(int vertices, std::vector<uint32_t> fs);

  bool contains_face(uint32_t f) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.is_void == b.is_void && a.facets == b.facets;
  }
};

// All k-faces (subsets of size k+1 contained in some facet), ascending mask
// order. k = -1 gives {emptyset} unless void.
std::vector<uint32_t> faces(const SimplicialComplex& c, int k);

// dim_Q of reduced simplicial homology in degree k, with the conventions
// H~_i(void) = 0 for all i and H~_{-1}({emptyset}) = Q.
int reduced_homology_dim(const SimplicialComplex& c, int k);

}  // namespace ql
