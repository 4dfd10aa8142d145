#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "quasilin/errors.hpp"

namespace ql {

// Arbitrary-precision integer. gmp's canonical C++ type is used directly;
// only the rational type below needs a wrapper (eager operators keep Eigen
// away from gmp's expression templates).
using Int = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}            // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rat(const Int& n) : v_(n) {}     // NOLINT
  Rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view s);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_ == 0) throw DomainError("Rat: division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // gmp keeps it canonical under arithmetic
};

Int floor(const Rat& r);
Int ceil(const Rat& r);
Rat abs(const Rat& r);

Int gcd(const Int& a, const Int& b);
// Largest z with z^2 <= n (n >= 0).
Int isqrt(const Int& n);
// Smallest integer >= sqrt(n).
Int isqrt_ceil(const Int& n);

}  // namespace ql

namespace Eigen {

template <>
struct NumTraits<ql::Rat> : GenericNumTraits<ql::Rat> {
  typedef ql::Rat Real;
  typedef ql::Rat NonInteger;
  typedef ql::Rat Nested;
  static inline ql::Rat epsilon() { return ql::Rat(0); }
  static inline ql::Rat dummy_precision() { return ql::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
};

template <>
struct NumTraits<ql::Int> : GenericNumTraits<ql::Int> {
  typedef ql::Int Real;
  typedef ql::Rat NonInteger;
  typedef ql::Int Nested;
  static inline ql::Int epsilon() { return ql::Int(0); }
  static inline ql::Int dummy_precision() { return ql::Int(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 40,
    MulCost = 40,
  };
};

}  // namespace Eigen
