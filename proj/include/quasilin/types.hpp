#pragma once

#include <Eigen/Core>
#include <vector>

#include "quasilin/rat.hpp"

namespace ql {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);

IntMat int_mat(std::initializer_list<std::initializer_list<long>> rows);
IntVec int_vec(std::initializer_list<long> entries);
RatVec rat_vec(std::initializer_list<Rat> entries);

bool lex_less(const RatVec& a, const RatVec& b);

bool vec_eq(const IntVec& a, const IntVec& b);
bool vec_eq(const RatVec& a, const RatVec& b);
bool mat_eq(const RatMat& a, const RatMat& b);

// Scales a rational vector to the unique integer vector with content 1 and
// the same orientation. Zero vector maps to zero.
IntVec primitive_integer_direction(const RatVec& v);

// Calls fn on every strictly increasing k-subset of {0,...,n-1}.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace ql
