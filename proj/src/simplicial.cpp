#include "quasilin/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "quasilin/linalg.hpp"

namespace ql {

SimplicialComplex SimplicialComplex::void_complex(int vertices) {
  return SimplicialComplex{vertices, {}, true};
}

SimplicialComplex SimplicialComplex::from_facets(int vertices,
                                                 std::vector<uint32_t> fs) {
  if (fs.empty()) return void_complex(vertices);
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  std::vector<uint32_t> maximal;
  for (uint32_t f : fs) {
    bool dominated = false;
    for (uint32_t g : fs)
      if (g != f && (f & g) == f) dominated = true;
    if (!dominated) maximal.push_back(f);
  }
  return SimplicialComplex{vertices, std::move(maximal), false};
}

bool SimplicialComplex::contains_face(uint32_t f) const {
  if (is_void) return false;
  for (uint32_t g : facets)
    if ((f & g) == f) return true;
  return false;
}

std::vector<uint32_t> faces(const SimplicialComplex& c, int k) {
  if (c.is_void || k < -1) return {};
  if (k == -1) return {0u};
  std::set<uint32_t> out;
  for (uint32_t facet : c.facets) {
    if (std::popcount(facet) < k + 1) continue;
    // walk all submasks of the facet, keeping those of size k+1
    uint32_t sub = facet;
    while (true) {
      if (std::popcount(sub) == k + 1) out.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  return {out.begin(), out.end()};
}

namespace {

int boundary_rank(const std::vector<uint32_t>& from,
                  const std::vector<uint32_t>& to) {
  if (from.empty() || to.empty()) return 0;
  IntMat m = IntMat::Constant(static_cast<Eigen::Index>(to.size()),
                              static_cast<Eigen::Index>(from.size()), Int(0));
  for (size_t col = 0; col < from.size(); ++col) {
    const uint32_t face = from[col];
    int sign = 1;
    for (uint32_t bits = face; bits != 0; bits &= bits - 1) {
      const uint32_t v = bits & (~bits + 1);  // lowest set bit
      const uint32_t sub = face ^ v;
      auto it = std::lower_bound(to.begin(), to.end(), sub);
      if (it != to.end() && *it == sub)
        m(static_cast<Eigen::Index>(it - to.begin()),
          static_cast<Eigen::Index>(col)) = sign;
      sign = -sign;
    }
  }
  return rank_over_Q(m);
}

}  // namespace

int reduced_homology_dim(const SimplicialComplex& c, int k) {
  if (c.is_void || k < -1) return 0;
  const std::vector<uint32_t> fk = faces(c, k);
  if (fk.empty()) return 0;
  const std::vector<uint32_t> fdown = faces(c, k - 1);
  const std::vector<uint32_t> fup = faces(c, k + 1);
  const int dim = static_cast<int>(fk.size()) - boundary_rank(fk, fdown) -
                  boundary_rank(fup, fk);
  return dim;
}

}  // namespace ql
