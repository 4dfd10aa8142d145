#include "quasilin/monomial.hpp"

#include <algorithm>

#include "quasilin/linalg.hpp"

namespace ql {

namespace {

bool divides(const IntVec& a, const IntVec& b) {  // X^a | X^b
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if (a(j) > b(j)) return false;
  return true;
}

uint32_t support_mask(const IntVec& v) {
  uint32_t m = 0;
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (v(j) != 0) m |= (1u << j);
  return m;
}

bool lex_less_int(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

}  // namespace

MonomialIdeal minimalize(int vars, std::vector<IntVec> gens) {
  if (gens.empty()) throw DomainError("minimalize: no generators");
  for (const IntVec& g : gens) {
    if (g.size() != vars) throw DomainError("minimalize: generator of wrong length");
    for (Eigen::Index j = 0; j < g.size(); ++j)
      if (g(j) < 0) throw DomainError("minimalize: negative exponent");
  }
  std::sort(gens.begin(), gens.end(), lex_less_int);
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const IntVec& a, const IntVec& b) { return vec_eq(a, b); }),
             gens.end());
  std::vector<IntVec> minimal;
  for (const IntVec& g : gens) {
    bool redundant = false;
    for (const IntVec& h : gens)
      if (!vec_eq(h, g) && divides(h, g)) redundant = true;
    if (!redundant) minimal.push_back(g);
  }
  Int d(0);
  for (const IntVec& g : minimal) {
    Int total(0);
    for (Eigen::Index j = 0; j < g.size(); ++j) total += g(j);
    d = std::max(d, total);
  }
  return MonomialIdeal{vars, std::move(minimal), d};
}

MonomialIdeal MonomialIdeal::make(int vars, std::vector<IntVec> gens) {
  return minimalize(vars, std::move(gens));
}

SimplicialComplex radical_complex(const MonomialIdeal& ideal) {
  const int r = ideal.vars;
  std::vector<uint32_t> supports;
  for (const IntVec& g : ideal.gens) {
    uint32_t s = support_mask(g);
    if (s == 0)
      throw DomainError("radical_complex: the ideal contains a unit (zero exponent vector)");
    supports.push_back(s);
  }
  std::vector<uint32_t> all_faces;
  for (uint32_t f = 0; f < (1u << r); ++f) {
    bool face = true;
    for (uint32_t s : supports)
      if ((s & f) == s) face = false;
    if (face) all_faces.push_back(f);
  }
  return SimplicialComplex::from_facets(r, std::move(all_faces));
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  const int r = ideal.vars;
  const int g = static_cast<int>(ideal.gens.size());
  std::vector<NewtonFacet> facets;
  auto already = [&](const IntVec& a, const Int& b) {
    for (const NewtonFacet& f : facets)
      if (f.b == b && vec_eq(f.a, a)) return true;
    return false;
  };

  for (int t = 1; t <= std::min(r, g); ++t) {
    for_each_combination(g, t, [&](const std::vector<int>& gi) {
      for_each_combination(r, r - t, [&](const std::vector<int>& ei) {
        // hyperplane through the chosen generators, parallel to the chosen
        // coordinate directions; its direction space must have rank r-1
        RatMat dirs(t - 1 + (r - t), r);
        const IntVec& anchor = ideal.gens[static_cast<size_t>(gi[0])];
        for (int i = 1; i < t; ++i)
          dirs.row(i - 1) =
              to_rat(IntVec(ideal.gens[static_cast<size_t>(gi[static_cast<size_t>(i)])] - anchor)).transpose();
        for (int i = 0; i < r - t; ++i) {
          RatVec e = RatVec::Constant(r, Rat(0));
          e(ei[static_cast<size_t>(i)]) = Rat(1);
          dirs.row(t - 1 + i) = e.transpose();
        }
        auto normal = kernel_direction(dirs);
        if (!normal) return;
        IntVec a = primitive_integer_direction(*normal);
        // orient outward-from-origin; mixed signs cannot support the
        // polyhedron conv(gens) + R_+^r
        int pos = 0, neg = 0;
        for (Eigen::Index j = 0; j < r; ++j) {
          if (a(j) > 0) ++pos;
          if (a(j) < 0) ++neg;
        }
        if (pos > 0 && neg > 0) return;
        if (neg > 0) a = -a;
        Int b(0);
        for (Eigen::Index j = 0; j < r; ++j) b += a(j) * anchor(j);
        if (b <= 0) return;
        for (const IntVec& gen : ideal.gens) {
          Int dot(0);
          for (Eigen::Index j = 0; j < r; ++j) dot += a(j) * gen(j);
          if (dot < b) return;
        }
        if (already(a, b)) return;
        int supp = 0;
        for (Eigen::Index j = 0; j < r; ++j)
          if (a(j) != 0) ++supp;
        // size bound carried by the cofactor construction
        Int cap(1);
        for (int i = 0; i < supp; ++i) cap *= ideal.dI;
        for (Eigen::Index j = 0; j < r; ++j)
          if (a(j) > cap)
            throw InvariantError("newton_polyhedron: facet coefficient exceeds degree bound");
        if (b > cap)
          throw InvariantError("newton_polyhedron: facet offset exceeds degree bound");
        facets.push_back(NewtonFacet{std::move(a), std::move(b), supp});
      });
    });
  }
  std::sort(facets.begin(), facets.end(), [](const NewtonFacet& x, const NewtonFacet& y) {
    if (lex_less_int(x.a, y.a)) return true;
    if (lex_less_int(y.a, x.a)) return false;
    return x.b < y.b;
  });
  return NewtonPolyhedron{r, ideal.dI, std::move(facets)};
}

bool in_closure_power(const NewtonPolyhedron& np, const Int& n, const IntVec& alpha) {
  if (alpha.size() != np.vars) throw DomainError("in_closure_power: wrong dimension");
  for (const NewtonFacet& f : np.facets) {
    Int dot(0);
    for (Eigen::Index j = 0; j < alpha.size(); ++j) dot += f.a(j) * alpha(j);
    if (dot < n * f.b) return false;
  }
  return true;
}

namespace {

// Enumerates [0, cap]^r, calling fn on each point in ascending total degree
// is not necessary; plain lexicographic order with a degree-sorted minimal
// filter afterwards keeps it simple.
template <typename Fn>
void for_each_box_point(int r, const Int& cap, Fn&& fn) {
  IntVec alpha = IntVec::Constant(r, Int(0));
  while (true) {
    fn(const_cast<const IntVec&>(alpha));
    int j = r - 1;
    while (j >= 0 && alpha(j) == cap) {
      alpha(j) = 0;
      --j;
    }
    if (j < 0) break;
    alpha(j) += 1;
  }
}

std::vector<IntVec> minimal_elements(std::vector<IntVec> pts) {
  std::sort(pts.begin(), pts.end(), [](const IntVec& a, const IntVec& b) {
    Int ta(0), tb(0);
    for (Eigen::Index j = 0; j < a.size(); ++j) ta += a(j);
    for (Eigen::Index j = 0; j < b.size(); ++j) tb += b(j);
    if (ta != tb) return ta < tb;
    return lex_less_int(a, b);
  });
  std::vector<IntVec> minimal;
  for (const IntVec& p : pts) {
    bool dominated = false;
    for (const IntVec& q : minimal)
      if (divides(q, p)) dominated = true;
    if (!dominated) minimal.push_back(p);
  }
  return minimal;
}

}  // namespace

std::vector<IntVec> closure_power_generators(const NewtonPolyhedron& np,
                                             const Int& n, const Int& degree_cap) {
  if (degree_cap < n * np.dI)
    throw DomainError("closure_power_generators: degree_cap below n*d(I)");
  std::vector<IntVec> members;
  for_each_box_point(np.vars, degree_cap, [&](const IntVec& alpha) {
    if (in_closure_power(np, n, alpha)) members.push_back(alpha);
  });
  std::vector<IntVec> minimal = minimal_elements(std::move(members));
  for (const IntVec& p : minimal)
    for (Eigen::Index j = 0; j < p.size(); ++j)
      if (p(j) == degree_cap)
        throw InvariantError(
            "closure_power_generators: a minimal point touches the cap; enlarge degree_cap");
  return minimal;
}

SquareFreeIdeal SquareFreeIdeal::make(MonomialIdeal base) {
  for (const IntVec& g : base.gens)
    for (Eigen::Index j = 0; j < g.size(); ++j)
      if (g(j) != 0 && g(j) != 1)
        throw DomainError("SquareFreeIdeal: exponent not in {0,1}");
  SimplicialComplex delta = radical_complex(base);
  const uint32_t full = (1u << base.vars) - 1;
  std::vector<uint32_t> primes;
  for (uint32_t f : delta.facets) primes.push_back(full & ~f);
  std::sort(primes.begin(), primes.end());
  return SquareFreeIdeal{std::move(base), std::move(primes)};
}

bool symbolic_membership(const SquareFreeIdeal& sf, const Int& n, const IntVec& alpha) {
  if (alpha.size() != sf.base.vars) throw DomainError("symbolic_membership: wrong dimension");
  for (uint32_t p : sf.primes) {
    Int sum(0);
    for (Eigen::Index j = 0; j < alpha.size(); ++j)
      if (p & (1u << j)) sum += alpha(j);
    if (sum < n) return false;
  }
  return true;
}

std::vector<IntVec> symbolic_generators(const SquareFreeIdeal& sf, const Int& n) {
  std::vector<IntVec> members;
  for_each_box_point(sf.base.vars, n, [&](const IntVec& alpha) {
    if (symbolic_membership(sf, n, alpha)) members.push_back(alpha);
  });
  return minimal_elements(std::move(members));
}

}  // namespace ql
