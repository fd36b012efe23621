#pragma once

#include <cstdint>
#include <string>

#include "qm/errors.hpp"

namespace qm {

bool is_prime(std::uint64_t q);

/// Element of the prime field F_q. The modulus travels with the value;
/// mixing moduli in one expression is a usage error.
class Fp {
 public:
  Fp(std::int64_t value, std::uint32_t q) : q_(q) {
    if (q < 2 || !is_prime(q)) throw ShapeError("modulus must be a prime >= 2");
    std::int64_t r = value % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Fp zero(std::uint32_t q) { return Fp(0, q); }
  static Fp one(std::uint32_t q) { return Fp(1, q); }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return q_; }

  bool is_zero() const { return v_ == 0; }
  Fp zero() const { return Fp(0, q_); }
  Fp one() const { return Fp(1, q_); }

  Fp operator-() const { return raw(v_ == 0 ? 0 : q_ - v_, q_); }
  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
    return raw(static_cast<std::uint32_t>(s >= q_ ? s - q_ : s), q_);
  }
  Fp operator-(const Fp& o) const { return *this + (-o); }
  Fp operator*(const Fp& o) const {
    check(o);
    return raw(static_cast<std::uint32_t>(
                   (static_cast<std::uint64_t>(v_) * o.v_) % q_),
               q_);
  }
  Fp inverse() const;
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp div_exact(const Fp& o) const { return *this / o; }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
  bool operator<(const Fp& o) const { check(o); return v_ < o.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t q) {
    Fp e;
    e.v_ = v;
    e.q_ = q;
    return e;
  }
  Fp() : v_(0), q_(0) {}
  void check(const Fp& o) const {
    if (q_ != o.q_) throw ShapeError("mixed field moduli");
  }

  std::uint32_t v_;
  std::uint32_t q_;
};

}  // namespace qm
