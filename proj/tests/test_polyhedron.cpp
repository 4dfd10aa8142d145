#include "doctest.h"
#include "oracles.hpp"
#include "quasilin/exact.hpp"
#include "quasilin/linalg.hpp"
#include "quasilin/polyhedron.hpp"

using namespace ql;

namespace {

Polyhedron unit_square() {
  return Polyhedron::from_int(int_mat({{1, 0}, {0, 1}}), int_vec({1, 1}));
}

// the three-vertex fixture: x1+x2 <= 1, 4x1 >= 1, 3x2 >= 1
Polyhedron three_vertex_triangle() {
  return Polyhedron::from_int(int_mat({{1, 1}, {-4, 0}, {0, -3}}),
                              int_vec({1, -1, -1}));
}

}  // namespace

TEST_SUITE_BEGIN("polyhedra");

TEST_CASE("vertex enumeration: unit square") {
  VRep v = enumerate_vrep(unit_square());
  REQUIRE(v.vertices.size() == 4);
  CHECK(v.rays.empty());
  CHECK(vec_eq(v.vertices[0], rat_vec({Rat(0), Rat(0)})));
  CHECK(vec_eq(v.vertices[3], rat_vec({Rat(1), Rat(1)})));
}

TEST_CASE("vertex enumeration: three-vertex triangle") {
  VRep v = enumerate_vrep(three_vertex_triangle());
  REQUIRE(v.vertices.size() == 3);
  CHECK(v.rays.empty());
  CHECK(vec_eq(v.vertices[0], rat_vec({Rat(Int(1), Int(4)), Rat(Int(1), Int(3))})));
  CHECK(vec_eq(v.vertices[1], rat_vec({Rat(Int(1), Int(4)), Rat(Int(3), Int(4))})));
  CHECK(vec_eq(v.vertices[2], rat_vec({Rat(Int(2), Int(3)), Rat(Int(1), Int(3))})));
}

TEST_CASE("vertex enumeration: half-strip has one vertex and two rays") {
  Polyhedron p = Polyhedron::from_int(int_mat({{-1, 0}}), int_vec({-1}));
  VRep v = enumerate_vrep(p);
  REQUIRE(v.vertices.size() == 1);
  CHECK(vec_eq(v.vertices[0], rat_vec({Rat(1), Rat(0)})));
  REQUIRE(v.rays.size() == 2);
  CHECK(vec_eq(v.rays[0], int_vec({0, 1})));
  CHECK(vec_eq(v.rays[1], int_vec({1, 0})));
}

TEST_CASE("every vertex and vertex+ray point satisfies the constraints") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> entry(-3, 3);
  int nonempty = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int s = 2 + trial % 3, r = 2 + trial % 2;
    IntMat a(s, r);
    IntVec b(s);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < r; ++j) a(i, j) = entry(rng);
      b(i) = entry(rng);
    }
    Polyhedron p = Polyhedron::from_int(a, b);
    VRep v = enumerate_vrep(p);
    if (!v.vertices.empty()) ++nonempty;
    for (const RatVec& x : v.vertices) {
      CHECK(contains(p, x));
      for (const IntVec& ray : v.rays) CHECK(contains(p, RatVec(x + to_rat(ray))));
    }
  }
  CHECK(nonempty > 5);
}

TEST_CASE("bounded instances: vertices + rational hull points stay inside") {
  VRep v = enumerate_vrep(three_vertex_triangle());
  // random rational convex combinations of the vertices
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> w(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Int w0(w(rng)), w1(w(rng)), w2(w(rng));
    Int tot = w0 + w1 + w2;
    if (tot == 0) continue;
    RatVec x = RatVec::Constant(2, Rat(0));
    x += v.vertices[0] * Rat(w0, tot);
    x += v.vertices[1] * Rat(w1, tot);
    x += v.vertices[2] * Rat(w2, tot);
    CHECK(contains(three_vertex_triangle(), x));
  }
}

TEST_CASE("full dimension: segment fixture is lower-dimensional") {
  Polyhedron seg = Polyhedron::from_int(int_mat({{1, 1}, {-1, -1}}), int_vec({2, -2}));
  CHECK_FALSE(is_full_dimensional(seg).full_dimensional);
}

TEST_CASE("full dimension: unit square with witness") {
  auto res = is_full_dimensional(unit_square());
  REQUIRE(res.full_dimensional);
  REQUIRE(res.witness.has_value());
  const InteriorWitness& w = *res.witness;
  // strict interior
  for (Eigen::Index j = 0; j < 2; ++j) CHECK(w.gamma(j).sign() > 0);
  CHECK(w.eps_gamma.sign() > 0);
  CHECK(w.N_gamma == Rat(1));  // no c supplied
}

TEST_CASE("full dimension: scaling-rows fixture with p=(2,3)") {
  Polyhedron p = Polyhedron::from_int(int_mat({{2, 0}, {0, 3}, {-2, -3}}),
                                      int_vec({1, 1, -1}));
  CHECK(is_full_dimensional(p).full_dimensional);
}

TEST_CASE("full dimension agrees with the rank of the difference matrix") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int s = 2 + trial % 3, r = 2;
    IntMat a(s, r);
    IntVec b(s);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < r; ++j) a(i, j) = entry(rng);
      b(i) = entry(rng);
    }
    Polyhedron p = Polyhedron::from_int(a, b);
    VRep v = enumerate_vrep(p);
    std::vector<RatVec> pts;
    for (const RatVec& al : v.vertices) {
      pts.push_back(al);
      for (const IntVec& be : v.rays) pts.push_back(RatVec(al + to_rat(be)));
    }
    bool full = false;
    if (!pts.empty()) {
      RatMat diffs(static_cast<Eigen::Index>(pts.size()) - 1, r);
      for (size_t i = 1; i < pts.size(); ++i)
        diffs.row(static_cast<Eigen::Index>(i - 1)) = (pts[i] - pts[0]).transpose();
      full = pts.size() >= 2 && rank(diffs) == r;
    }
    CHECK(is_full_dimensional(p).full_dimensional == full);
  }
}

TEST_CASE("epsilon_zero: unit square and triangle") {
  CHECK(epsilon_zero(unit_square(), enumerate_vrep(unit_square())) == Rat(1));
  // nine slacks evaluated by hand: minimum positive is 5/12
  Polyhedron tri = three_vertex_triangle();
  CHECK(epsilon_zero(tri, enumerate_vrep(tri)) == Rat(Int(5), Int(12)));
}

TEST_CASE("epsilon_zero: single-point polyhedron with all constraints tight") {
  Polyhedron point = Polyhedron::from_int(int_mat({{1, 0}, {0, 1}, {-1, -1}}),
                                          int_vec({0, 0, 0}));
  CHECK_THROWS_AS(epsilon_zero(point, enumerate_vrep(point)), DegenerateInputError);
}

TEST_CASE("epsilon_zero respects the 1/D^2 floor on random integral data") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    const int s = 2 + trial % 3, r = 2;
    IntMat a(s, r);
    IntVec b(s);
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < r; ++j) a(i, j) = entry(rng);
      b(i) = entry(rng);
    }
    Polyhedron p = Polyhedron::from_int(a, b);
    VRep v = enumerate_vrep(p);
    if (v.vertices.empty()) continue;
    try {
      Rat eps = epsilon_zero(p, v);  // throws InvariantError below 1/D^2
      Int d = std::max(max_abs_subdet(a, 2).value, Int(1));
      CHECK(eps >= Rat(Int(1), d * d));
      ++checked;
    } catch (const DegenerateInputError&) {
    }
  }
  CHECK(checked >= 15);
}

TEST_CASE("scale_and_relax") {
  Polyhedron p = unit_square();
  Polyhedron same = scale_and_relax(p, Int(1), RatVec::Constant(2, Rat(0)));
  CHECK(vec_eq(same.b(), p.b()));
  CHECK(mat_eq(same.A(), p.A()));

  // segment fixture with c = (-1, 0): empty for every n
  Polyhedron seg = Polyhedron::from_int(int_mat({{1, 1}, {-1, -1}}), int_vec({2, -2}));
  RatVec c = rat_vec({Rat(-1), Rat(0)});
  for (long n = 1; n <= 6; ++n)
    CHECK(enumerate_vrep(scale_and_relax(seg, Int(n), c)).vertices.empty());

  // lower-bounded box with c1 = -2m: empty exactly below m
  const long m = 3;
  Polyhedron box = Polyhedron::from_int(int_mat({{-1, -1}, {1, 0}, {0, 1}}),
                                        int_vec({-2, 2, 2}));
  RatVec c2 = rat_vec({Rat(-2 * m), Rat(0), Rat(0)});
  for (long n = 1; n <= 6; ++n) {
    const bool empty = enumerate_vrep(scale_and_relax(box, Int(n), c2)).vertices.empty();
    CHECK(empty == (n < m));
  }
}

TEST_CASE("contains") {
  CHECK(contains(unit_square(), rat_vec({Rat(0), Rat(0)})));
  CHECK_FALSE(contains(unit_square(), rat_vec({Rat(2), Rat(0)})));
  CHECK_FALSE(contains(unit_square(), rat_vec({Rat(-1), Rat(0)})));
}

TEST_SUITE_END();
