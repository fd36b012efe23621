#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qm/matrix.hpp"
#include "qm/rational.hpp"

namespace qm {

/// Homogeneous polynomial in two variables (s, t) with rational
/// coefficients. coeff(i) is the coefficient of s^(degree-i) t^i.
/// The zero form is canonically represented with degree 0.
class BinaryForm {
 public:
  BinaryForm() : degree_(0), c_{Rat()} {}
  explicit BinaryForm(const Rat& constant) : degree_(0), c_{constant} { canonicalize(); }
  BinaryForm(int degree, std::vector<Rat> coeffs);

  /// ks*s + kt*t; collapses to the zero form when both are zero.
  static BinaryForm linear(const Rat& ks, const Rat& kt);

  int degree() const { return degree_; }
  const Rat& coeff(int i) const { return c_[i]; }
  bool is_zero() const;
  bool is_constant() const { return degree_ == 0; }

  /// Exponent of s dividing the form; 0 for the zero form.
  int s_multiplicity() const;

  Rat eval(const Rat& s, const Rat& t) const;

  BinaryForm operator-() const;
  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const { return *this + (-o); }
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm& operator+=(const BinaryForm& o) { return *this = *this + o; }
  BinaryForm& operator-=(const BinaryForm& o) { return *this = *this - o; }
  BinaryForm& operator*=(const BinaryForm& o) { return *this = *this * o; }

  /// Exact quotient; the divisor must divide evenly (Bareiss guarantees it).
  BinaryForm div_exact(const BinaryForm& o) const;

  /// Integer-primitive scalar multiple with positive leading coefficient
  /// (leading = highest power of s present).
  BinaryForm normalized() const;

  BinaryForm zero() const { return BinaryForm(); }
  BinaryForm one() const { return BinaryForm(Rat(1)); }

  bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void canonicalize();

  int degree_;
  std::vector<Rat> c_;
};

inline int elimination_weight(const BinaryForm& f) { return f.degree(); }

/// gcd of binary forms, normalized (integer-primitive, positive leading
/// coefficient). gcd of an empty list or of all-zero forms is the zero form.
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);
BinaryForm form_gcd(const std::vector<BinaryForm>& forms);

}  // namespace qm
