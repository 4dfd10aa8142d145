#pragma once

#include <optional>

#include "quasilin/polyhedron.hpp"
#include "quasilin/types.hpp"

namespace ql {

// Optimum of a maximisation problem: finite with witness, -inf (infeasible)
// or +inf (unbounded).
class OptValue {
 public:
  enum class Tag { Finite, NegInfinity, PosInfinity };

  static OptValue neg_infinity() { return OptValue(Tag::NegInfinity); }
  static OptValue pos_infinity() { return OptValue(Tag::PosInfinity); }
  static OptValue finite(Rat value, std::optional<RatVec> witness = std::nullopt) {
    OptValue v(Tag::Finite);
    v.value_ = std::move(value);
    v.witness_ = std::move(witness);
    return v;
  }

  Tag tag() const { return tag_; }
  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_neg_infinity() const { return tag_ == Tag::NegInfinity; }
  bool is_pos_infinity() const { return tag_ == Tag::PosInfinity; }
  const Rat& value() const {
    if (!is_finite()) throw DomainError("OptValue: no finite value");
    return value_;
  }
  const std::optional<RatVec>& witness() const { return witness_; }

  std::string str() const {
    switch (tag_) {
      case Tag::NegInfinity: return "-inf";
      case Tag::PosInfinity: return "+inf";
      default: return value_.str();
    }
  }

 private:
  explicit OptValue(Tag t) : tag_(t) {}
  Tag tag_;
  Rat value_{0};
  std::optional<RatVec> witness_;
};

// phi_n = phi * n + phi0 for all integers n >= N1.
struct LpLaw {
  Rat phi;
  Rat phi0;
  Int N1;
  RatVec dual_vertex;
};

// max { d.x : x in p }. Finite values come with the lexicographically
// smallest maximizing vertex.
OptValue solve_lp(const Polyhedron& p, const RatVec& d);

// Eventual value law of max{d.x : Ax <= nb + c, x >= 0} via the vertices of
// the dual polyhedron {y >= 0, y^T A >= d^T}. Requires {Ax <= b, x >= 0}
// full-dimensional with finite primal optimum.
LpLaw lp_value_law(const RatMat& a, const RatVec& b, const RatVec& c,
                   const RatVec& d);

// N0 = 1 + (r+1)/eps0 * max{0, -c_1, ..., -c_s}; interior of the n-fold
// relaxation is nonempty for every n >= N0. Requires full dimension.
Rat n_zero(const Polyhedron& p, const RatVec& c);

}  // namespace ql
