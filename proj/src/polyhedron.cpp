#include "quasilin/polyhedron.hpp"

#include <algorithm>

#include "quasilin/exact.hpp"
#include "quasilin/linalg.hpp"

namespace ql {

Polyhedron::Polyhedron(RatMat a, RatVec b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.cols() < 1) throw DomainError("Polyhedron: needs at least one variable");
  if (a_.rows() != b_.size()) throw DomainError("Polyhedron: A and b disagree");
}

Polyhedron Polyhedron::from_int(const IntMat& a, const IntVec& b) {
  return Polyhedron(to_rat(a), to_rat(b));
}

namespace {

// Structural rows followed by the nonnegativity rows -e_j x <= 0.
void stacked_rows(const Polyhedron& p, RatMat& rows, RatVec& rhs) {
  const Eigen::Index s = p.rows(), r = p.dim();
  rows = RatMat::Constant(s + r, r, Rat(0));
  rhs = RatVec::Constant(s + r, Rat(0));
  rows.topRows(s) = p.A();
  rhs.head(s) = p.b();
  for (Eigen::Index j = 0; j < r; ++j) rows(s + j, j) = Rat(-1);
}

bool in_recession_cone(const Polyhedron& p, const RatVec& v) {
  for (Eigen::Index j = 0; j < p.dim(); ++j)
    if (v(j).sign() < 0) return false;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Rat dot(0);
    for (Eigen::Index j = 0; j < p.dim(); ++j) dot += p.A()(i, j) * v(j);
    if (dot.sign() > 0) return false;
  }
  return true;
}

}  // namespace

VRep enumerate_vrep(const Polyhedron& p) {
  const Eigen::Index s = p.rows(), r = p.dim();
  RatMat rows;
  RatVec rhs;
  stacked_rows(p, rows, rhs);
  const int m = static_cast<int>(s + r);

  std::vector<RatVec> vertices;
  for_each_combination(m, static_cast<int>(r), [&](const std::vector<int>& idx) {
    RatMat sub(r, r);
    RatVec sb(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      sub.row(i) = rows.row(idx[static_cast<size_t>(i)]);
      sb(i) = rhs(idx[static_cast<size_t>(i)]);
    }
    auto x = solve_square(sub, sb);
    if (!x) return;
    if (contains(p, *x)) vertices.push_back(*x);
  });
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end(),
                             [](const RatVec& a, const RatVec& b) {
                               return !lex_less(a, b) && !lex_less(b, a);
                             }),
                 vertices.end());

  // Extreme rays: r-1 independent tight rows of the homogenized system pin a
  // one-dimensional kernel; feasibility of +/- the kernel direction decides.
  std::vector<IntVec> rays;
  std::vector<IntVec> seen;
  for_each_combination(m, static_cast<int>(r) - 1, [&](const std::vector<int>& idx) {
    RatMat sub(static_cast<Eigen::Index>(idx.size()), r);
    for (size_t i = 0; i < idx.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = rows.row(idx[i]);
    auto v = kernel_direction(sub);
    if (!v) return;
    for (int sign = 0; sign < 2; ++sign) {
      RatVec cand = sign == 0 ? *v : RatVec(-*v);
      if (!in_recession_cone(p, cand)) continue;
      IntVec prim = primitive_integer_direction(cand);
      bool zero = true;
      for (Eigen::Index j = 0; j < r; ++j)
        if (prim(j) != 0) zero = false;
      if (zero) continue;
      bool dup = false;
      for (const IntVec& q : seen)
        if (vec_eq(q, prim)) dup = true;
      if (!dup) seen.push_back(prim);
    }
  });
  // r == 1: the kernel of the empty system is all of R^1
  if (r == 1) {
    RatVec e = RatVec::Constant(1, Rat(1));
    for (int sign = 0; sign < 2; ++sign) {
      RatVec cand = sign == 0 ? e : RatVec(-e);
      if (!in_recession_cone(p, cand)) continue;
      IntVec prim = primitive_integer_direction(cand);
      bool dup = false;
      for (const IntVec& q : seen)
        if (vec_eq(q, prim)) dup = true;
      if (!dup) seen.push_back(prim);
    }
  }
  rays = std::move(seen);
  std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  });
  return VRep{std::move(vertices), std::move(rays)};
}

FullDimResult is_full_dimensional(const Polyhedron& p,
                                  const std::optional<RatVec>& c) {
  const Eigen::Index r = p.dim(), s = p.rows();
  if (c && c->size() != s) throw DomainError("is_full_dimensional: c has wrong length");
  VRep v = enumerate_vrep(p);
  if (v.vertices.empty()) return {};

  // candidate points: every vertex plus each single ray (beta_0 = 0)
  std::vector<RatVec> pts;
  for (const RatVec& a : v.vertices) {
    pts.push_back(a);
    for (const IntVec& b : v.rays) pts.push_back(RatVec(a + to_rat(b)));
  }

  // greedily extend an affinely independent subset
  std::vector<RatVec> chosen{pts.front()};
  RatMat diffs(0, r);
  for (size_t i = 1; i < pts.size() && chosen.size() < static_cast<size_t>(r) + 1; ++i) {
    RatMat trial(diffs.rows() + 1, r);
    trial.topRows(diffs.rows()) = diffs;
    trial.row(diffs.rows()) = (pts[i] - chosen.front()).transpose();
    if (rank(trial) == trial.rows()) {
      diffs = trial;
      chosen.push_back(pts[i]);
    }
  }
  if (chosen.size() != static_cast<size_t>(r) + 1) return {};

  RatVec gamma = RatVec::Constant(r, Rat(0));
  for (const RatVec& q : chosen) gamma += q;
  const Rat inv = Rat(1, Int(r + 1));
  for (Eigen::Index j = 0; j < r; ++j) gamma(j) *= inv;

  Rat eps(1);  // no structural rows: any positive value serves
  for (Eigen::Index i = 0; i < s; ++i) {
    Rat slack = p.b()(i);
    for (Eigen::Index j = 0; j < r; ++j) slack -= p.A()(i, j) * gamma(j);
    if (i == 0 || slack < eps) eps = slack;
  }
  if (s > 0 && eps.sign() <= 0)
    throw InvariantError("is_full_dimensional: barycenter not interior");

  Rat worst(0);
  if (c)
    for (Eigen::Index i = 0; i < s; ++i) worst = std::max(worst, Rat(-(*c)(i)));
  Rat n_gamma = Rat(1) + worst / eps;
  return {true, InteriorWitness{std::move(gamma), eps, n_gamma}};
}

Rat epsilon_zero(const Polyhedron& p, const VRep& v) {
  const Eigen::Index s = p.rows(), r = p.dim();
  if (v.vertices.empty()) throw DomainError("epsilon_zero: empty polyhedron");
  if (s == 0) return Rat(1);
  bool found = false;
  Rat eps(0);
  std::vector<RatVec> pts;
  for (const RatVec& a : v.vertices) {
    pts.push_back(a);
    for (const IntVec& b : v.rays) pts.push_back(RatVec(a + to_rat(b)));
  }
  for (Eigen::Index i = 0; i < s; ++i) {
    for (const RatVec& q : pts) {
      Rat slack = p.b()(i);
      for (Eigen::Index j = 0; j < r; ++j) slack -= p.A()(i, j) * q(j);
      if (slack.sign() > 0 && (!found || slack < eps)) {
        eps = slack;
        found = true;
      }
    }
  }
  if (!found)
    throw DegenerateInputError(
        "epsilon_zero: every constraint is tight at every generator point");

  // integral data admits the lower bound eps0 >= 1/D^2
  bool integral = true;
  for (Eigen::Index i = 0; i < s && integral; ++i) {
    if (!p.b()(i).is_integer()) integral = false;
    for (Eigen::Index j = 0; j < r && integral; ++j)
      if (!p.A()(i, j).is_integer()) integral = false;
  }
  if (integral) {
    IntMat a(s, r);
    for (Eigen::Index i = 0; i < s; ++i)
      for (Eigen::Index j = 0; j < r; ++j) a(i, j) = p.A()(i, j).num();
    Int d = std::max(max_abs_subdet(a, static_cast<int>(std::min(s, r))).value, Int(1));
    if (eps < Rat(Int(1), d * d))
      throw InvariantError("epsilon_zero: slack below 1/D^2 on integral data");
  }
  return eps;
}

Polyhedron scale_and_relax(const Polyhedron& p, const Int& n, const RatVec& c) {
  if (c.size() != p.rows()) throw DomainError("scale_and_relax: c has wrong length");
  RatVec b(p.rows());
  for (Eigen::Index i = 0; i < p.rows(); ++i) b(i) = p.b()(i) * Rat(n) + c(i);
  return Polyhedron(p.A(), std::move(b));
}

bool contains(const Polyhedron& p, const RatVec& x) {
  if (x.size() != p.dim()) throw DomainError("contains: point has wrong dimension");
  for (Eigen::Index j = 0; j < p.dim(); ++j)
    if (x(j).sign() < 0) return false;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Rat lhs(0);
    for (Eigen::Index j = 0; j < p.dim(); ++j) lhs += p.A()(i, j) * x(j);
    if (lhs > p.b()(i)) return false;
  }
  return true;
}

}  // namespace ql
