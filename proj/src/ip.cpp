#include "quasilin/ip.hpp"

#include <algorithm>
#include <optional>

#include "quasilin/exact.hpp"

namespace ql {

ParamIP::ParamIP(IntMat a, IntVec b_, IntVec c_, IntVec d_)
    : A(std::move(a)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (A.rows() < 1 || A.cols() < 1) throw DomainError("ParamIP: needs >= 1 row and column");
  if (b.size() != A.rows() || c.size() != A.rows() || d.size() != A.cols())
    throw DomainError("ParamIP: dimension mismatch");
}

Polyhedron ParamIP::base_polyhedron() const { return Polyhedron::from_int(A, b); }

Polyhedron ParamIP::relaxation(const Int& n) const {
  IntVec rhs(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i) rhs(i) = n * b(i) + c(i);
  return Polyhedron::from_int(A, rhs);
}

namespace {

struct Bounds {
  std::vector<Int> lb;
  std::vector<std::optional<Int>> ub;
};

Polyhedron with_bounds(const Polyhedron& base, const Bounds& bounds) {
  const Eigen::Index r = base.dim();
  Eigen::Index extra = 0;
  for (Eigen::Index j = 0; j < r; ++j) {
    if (bounds.lb[static_cast<size_t>(j)] > 0) ++extra;
    if (bounds.ub[static_cast<size_t>(j)]) ++extra;
  }
  RatMat a = RatMat::Constant(base.rows() + extra, r, Rat(0));
  RatVec b(base.rows() + extra);
  a.topRows(base.rows()) = base.A();
  b.head(base.rows()) = base.b();
  Eigen::Index row = base.rows();
  for (Eigen::Index j = 0; j < r; ++j) {
    if (bounds.lb[static_cast<size_t>(j)] > 0) {
      a(row, j) = Rat(-1);
      b(row) = Rat(-bounds.lb[static_cast<size_t>(j)]);
      ++row;
    }
    if (bounds.ub[static_cast<size_t>(j)]) {
      a(row, j) = Rat(1);
      b(row) = Rat(*bounds.ub[static_cast<size_t>(j)]);
      ++row;
    }
  }
  return Polyhedron(std::move(a), std::move(b));
}

bool integral(const RatVec& x) {
  for (Eigen::Index j = 0; j < x.size(); ++j)
    if (!x(j).is_integer()) return false;
  return true;
}

// Depth-first exact branch and bound over a region whose relaxation is
// bounded. Returns the maximum of d.x over integer points, or -inf.
OptValue branch_and_bound(const Polyhedron& region, const RatVec& d,
                          const Bounds& root) {
  OptValue root_lp = solve_lp(with_bounds(region, root), d);
  if (root_lp.is_neg_infinity()) return OptValue::neg_infinity();
  if (root_lp.is_pos_infinity())
    throw InvariantError("branch_and_bound: relaxation unbounded inside a box");
  const Rat root_bound = root_lp.value();

  std::optional<Rat> incumbent;
  std::optional<RatVec> incumbent_point;
  std::vector<Bounds> stack{root};
  while (!stack.empty()) {
    Bounds node = std::move(stack.back());
    stack.pop_back();
    OptValue lp = solve_lp(with_bounds(region, node), d);
    if (lp.is_neg_infinity()) continue;
    if (incumbent && lp.value() <= *incumbent) continue;
    const RatVec& x = *lp.witness();
    if (integral(x)) {
      incumbent = lp.value();
      incumbent_point = x;
      if (*incumbent == root_bound) break;  // proven optimal
      continue;
    }
    // branch on the fractional coordinate with the largest denominator
    Eigen::Index pick = -1;
    Int best_den(1);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (x(j).is_integer()) continue;
      if (x(j).den() > best_den) {
        best_den = x(j).den();
        pick = j;
      }
    }
    Bounds up = node;
    up.lb[static_cast<size_t>(pick)] = ceil(x(pick));
    Bounds down = std::move(node);
    down.ub[static_cast<size_t>(pick)] = floor(x(pick));
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));  // explored first
  }
  if (!incumbent) return OptValue::neg_infinity();
  return OptValue::finite(*incumbent, incumbent_point);
}

}  // namespace

OptValue solve_ip(const ParamIP& pip, const Int& n) {
  const Polyhedron region = pip.relaxation(n);
  const int r = pip.r();
  VRep vrep = enumerate_vrep(region);
  if (vrep.vertices.empty()) return OptValue::neg_infinity();

  const RatVec d = to_rat(pip.d);
  bool lp_unbounded = false;
  for (const IntVec& ray : vrep.rays) {
    Rat gain(0);
    for (Eigen::Index j = 0; j < r; ++j) gain += d(j) * Rat(ray(j));
    if (gain.sign() > 0) lp_unbounded = true;
  }

  Bounds root{std::vector<Int>(static_cast<size_t>(r), Int(0)),
              std::vector<std::optional<Int>>(static_cast<size_t>(r))};
  if (!vrep.rays.empty()) {
    // box the region: an optimal integer point lies within r*D of some
    // optimal vertex, and an integer point exists iff one exists within the
    // vertex hull plus one sub-unit combination of the rays
    Int vert_max(0);
    for (const RatVec& v : vrep.vertices)
      for (Eigen::Index j = 0; j < r; ++j) vert_max = std::max(vert_max, ceil(v(j)));
    Int ray_sum(0);
    for (const IntVec& ray : vrep.rays) {
      Int m(0);
      for (Eigen::Index j = 0; j < r; ++j) m = std::max(m, ray(j));
      ray_sum += m;
    }
    const Int d_stat = std::max(
        max_abs_subdet(pip.A, std::min(pip.s(), r)).value, Int(1));
    const Int box = vert_max + std::max(Int(r) * d_stat, ray_sum);
    for (int j = 0; j < r; ++j) root.ub[static_cast<size_t>(j)] = box;
  }

  if (lp_unbounded) {
    const RatVec zero = RatVec::Constant(r, Rat(0));
    OptValue feas = branch_and_bound(region, zero, root);
    return feas.is_finite() ? OptValue::pos_infinity() : OptValue::neg_infinity();
  }
  return branch_and_bound(region, d, root);
}

IpSweep sweep(const ParamIP& pip, long n_lo, long n_hi) {
  if (n_lo > n_hi) throw DomainError("sweep: n_lo > n_hi");
  IpSweep out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.values.reserve(static_cast<size_t>(n_hi - n_lo + 1));
  for (long n = n_lo; n <= n_hi; ++n) out.values.push_back(solve_ip(pip, Int(n)));
  return out;
}

Int kappa(const ParamIP& pip) {
  if (!is_full_dimensional(pip.base_polyhedron()).full_dimensional)
    throw DomainError(
        "kappa: base polyhedron not full-dimensional (feasibility can then fail "
        "on entire residue classes)");
  Int a_star(0);
  for (Eigen::Index i = 0; i < pip.A.rows(); ++i)
    for (Eigen::Index j = 0; j < pip.A.cols(); ++j) {
      Int v = pip.A(i, j);
      if (v < 0) v = -v;
      a_star = std::max(a_star, v);
    }
  Int c_star = pip.c(0);
  for (Eigen::Index i = 1; i < pip.c.size(); ++i) c_star = std::min(c_star, pip.c(i));
  const Int d_stat =
      std::max(max_abs_subdet(pip.A, std::min(pip.s(), pip.r())).value, Int(1));
  const Rat inner = Rat(Int(pip.r()), Int(2)) * Rat(a_star) - Rat(c_star);
  const Rat k = Rat(Int(pip.r() + 1)) * Rat(d_stat * d_stat) * inner;
  return std::max(Int(1), ceil(k));
}

}  // namespace ql
