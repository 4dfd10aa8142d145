#include "quasilin/lp.hpp"

#include <algorithm>

namespace ql {

OptValue solve_lp(const Polyhedron& p, const RatVec& d) {
  if (d.size() != p.dim()) throw DomainError("solve_lp: objective has wrong length");
  VRep v = enumerate_vrep(p);
  if (v.vertices.empty()) return OptValue::neg_infinity();
  for (const IntVec& ray : v.rays) {
    Rat gain(0);
    for (Eigen::Index j = 0; j < p.dim(); ++j) gain += d(j) * Rat(ray(j));
    if (gain.sign() > 0) return OptValue::pos_infinity();
  }
  // vertices are sorted lexicographically, so the first maximizer is lex-min
  std::optional<Rat> best;
  std::optional<RatVec> arg;
  for (const RatVec& x : v.vertices) {
    Rat val(0);
    for (Eigen::Index j = 0; j < p.dim(); ++j) val += d(j) * x(j);
    if (!best || val > *best) {
      best = val;
      arg = x;
    }
  }
  return OptValue::finite(*best, arg);
}

Rat n_zero(const Polyhedron& p, const RatVec& c) {
  if (c.size() != p.rows()) throw DomainError("n_zero: c has wrong length");
  if (!is_full_dimensional(p).full_dimensional)
    throw DomainError("n_zero: polyhedron not full-dimensional");
  Rat worst(0);
  for (Eigen::Index i = 0; i < c.size(); ++i) worst = std::max(worst, Rat(-c(i)));
  if (worst.sign() == 0) return Rat(1);
  const Rat eps0 = epsilon_zero(p, enumerate_vrep(p));
  return Rat(1) + Rat(Int(p.dim() + 1)) / eps0 * worst;
}

LpLaw lp_value_law(const RatMat& a, const RatVec& b, const RatVec& c,
                   const RatVec& d) {
  const Eigen::Index s = a.rows(), r = a.cols();
  if (b.size() != s || c.size() != s || d.size() != r)
    throw DomainError("lp_value_law: shape mismatch");
  Polyhedron primal(a, b);
  if (!is_full_dimensional(primal).full_dimensional)
    throw DomainError("lp_value_law: primal polyhedron not full-dimensional");
  OptValue primal_opt = solve_lp(primal, d);
  if (!primal_opt.is_finite())
    throw DomainError("lp_value_law: primal optimum not finite");

  // dual feasible region {y >= 0, y^T A >= d^T} as {-A^T y <= -d, y >= 0}
  RatMat dual_a(r, s);
  RatVec dual_b(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) dual_a(i, j) = -a(j, i);
    dual_b(i) = -d(i);
  }
  VRep dual = enumerate_vrep(Polyhedron(dual_a, dual_b));
  if (dual.vertices.empty())
    throw InvariantError("lp_value_law: dual polyhedron has no vertex");

  // lines u = (y.b) v + (y.c); the eventual minimum has the smallest slope,
  // ties resolved by the smaller intercept
  struct Line {
    Rat slope, intercept;
    RatVec vertex;
  };
  std::vector<Line> lines;
  for (const RatVec& y : dual.vertices) {
    Rat slope(0), intercept(0);
    for (Eigen::Index j = 0; j < s; ++j) {
      slope += y(j) * b(j);
      intercept += y(j) * c(j);
    }
    lines.push_back({slope, intercept, y});
  }
  const Line* winner = &lines.front();
  for (const Line& l : lines) {
    if (l.slope < winner->slope ||
        (l.slope == winner->slope && l.intercept < winner->intercept))
      winner = &l;
  }
  if (winner->slope != primal_opt.value())
    throw InvariantError("lp_value_law: dual slope differs from primal optimum");

  // largest abscissa where two distinct lines cross
  std::optional<Rat> v_star;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      Rat x = (lines[j].intercept - lines[i].intercept) /
              (lines[i].slope - lines[j].slope);
      if (!v_star || x > *v_star) v_star = x;
    }

  Int n1 = ceil(n_zero(primal, c));
  if (v_star) n1 = std::max(n1, ceil(*v_star));
  return LpLaw{winner->slope, winner->intercept, n1, winner->vertex};
}

}  // namespace ql
