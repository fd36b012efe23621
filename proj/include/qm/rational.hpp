#pragma once

#include <gmpxx.h>

#include <string>

#include "qm/errors.hpp"

namespace qm {

using BigInt = mpz_class;

/// Exact rational number. Always kept canonical: positive denominator,
/// numerator and denominator coprime.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(const BigInt& n) : v_(n) {}
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ShapeError("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "-p", or "p/q" in base 10.
  static Rat parse(const std::string& s);

  /// Canonical form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return v_ == 0; }
  int sgn() const { return ::sgn(v_); }
  Rat zero() const { return Rat(); }
  Rat one() const { return Rat(1); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw ShapeError("division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat div_exact(const Rat& o) const { return *this / o; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

 private:
  mpq_class v_;
};

inline BigInt bigint_of(long long v) {
  // mpz_class lacks a long long constructor.
  return BigInt(std::to_string(v));
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace qm
