#include "doctest.h"
#include "oracles.hpp"
#include "quasilin/exact.hpp"
#include "quasilin/linalg.hpp"

using namespace ql;

TEST_SUITE_BEGIN("exact");

TEST_CASE("rationals stay canonical") {
  Rat a(Int(4), Int(6));
  CHECK(a.num() == 2);
  CHECK(a.den() == 3);
  Rat b(Int(1), Int(-2));
  CHECK(b.num() == -1);
  CHECK(b.den() == 2);
  CHECK((a + b).str() == "1/6");
  CHECK((a * b).str() == "-1/3");
  CHECK(Rat::parse("-7/21").str() == "-1/3");
  CHECK(Rat::parse("5").str() == "5");
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), DomainError);
  CHECK_THROWS_AS(Rat::parse("1/0x"), ParseError);
  CHECK(floor(Rat(Int(-7), Int(2))) == -4);
  CHECK(ceil(Rat(Int(-7), Int(2))) == -3);
  CHECK(floor(Rat(3)) == 3);
}

TEST_CASE("determinant basics") {
  CHECK(det(IntMat::Identity(3, 3)) == 1);
  // three generator exponent rows with a column of ones appended; value
  // fixed by the Laplace oracle
  IntMat m = int_mat({{1, 4, 1}, {3, 2, 1}, {5, 1, 1}});
  CHECK(oracle::det_naive(m) == 2);
  CHECK(det(m) == 2);
  IntMat rep = int_mat({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
  CHECK(det(rep) == 0);
  CHECK_THROWS_AS(det(int_mat({{1, 2}})), DomainError);
}

TEST_CASE("bareiss agrees with Laplace on random 5x5 and 6x6") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 5 + trial % 2;
    IntMat m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = entry(rng);
    CHECK(det(m) == oracle::det_naive(m));
  }
}

TEST_CASE("determinant flips sign under a row swap") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = entry(rng);
    IntMat swapped = m;
    swapped.row(0).swap(swapped.row(2));
    CHECK(det(swapped) == -det(m));
  }
}

TEST_CASE("max_abs_subdet: exact enumeration matches brute force up to 5x7") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 2 + trial % 4, cols = 2 + (trial * 3) % 6;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
    SubdetBound got = max_abs_subdet(m, std::min(rows, cols));
    CHECK(got.exact);
    CHECK(got.value == oracle::max_subdet_naive(m));
  }
}

TEST_CASE("max_abs_subdet: totally unimodular example") {
  // interval matrix: every subdeterminant is 0 or +-1
  IntMat m = int_mat({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  SubdetBound got = max_abs_subdet(m, 3);
  CHECK(got.exact);
  CHECK(got.value == 1);
}

TEST_CASE("max_abs_subdet: two-generator scaling rows") {
  // rows (2,0),(0,3),(-2,-3): the largest subdeterminant is the product 6
  IntMat m = int_mat({{2, 0}, {0, 3}, {-2, -3}});
  SubdetBound got = max_abs_subdet(m, 2);
  CHECK(got.exact);
  CHECK(got.value == 6);
  CHECK(got.value == oracle::max_subdet_naive(m));
}

TEST_CASE("hadamard fallback bounds the exact value") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat m(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = entry(rng);
    CHECK(hadamard_subdet_bound(m, 4) >= oracle::max_subdet_naive(m));
  }
  // all-(+-d) k x k matrix: the bound is floor(k^(k/2) d^k)
  IntMat pm = int_mat({{3, -3}, {-3, 3}});
  CHECK(hadamard_subdet_bound(pm, 2) == 18);  // 2^(2/2) * 3^2
  SubdetBound forced = max_abs_subdet(pm, 2, /*budget=*/1);
  CHECK_FALSE(forced.exact);
  CHECK(forced.value == 18);
}

TEST_CASE("rank over Q") {
  CHECK(rank_over_Q(IntMat::Constant(3, 4, Int(0))) == 0);
  CHECK(rank_over_Q(IntMat::Identity(5, 5)) == 5);
  // boundary matrix of the hollow triangle: three edges over three vertices
  IntMat d1 = int_mat({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  CHECK(rank_over_Q(d1) == 2);
}

TEST_CASE("gcd_list") {
  CHECK(gcd_list({Int(6)}) == 6);
  CHECK(gcd_list({Int(4), Int(6)}) == 2);
  CHECK(gcd_list({Int(2), Int(3)}) == 1);
  CHECK_THROWS_AS(gcd_list({}), DomainError);
  CHECK_THROWS_AS(gcd_list({Int(2), Int(0)}), DomainError);
}

TEST_SUITE_END();
