#include "qm/fp.hpp"

namespace qm {

bool is_prime(std::uint64_t q) {
  static thread_local std::uint64_t last_prime = 0;
  if (q == last_prime) return true;
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  last_prime = q;
  return true;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw ShapeError("division by zero in F_q");
  // Extended Euclid on (v, q).
  std::int64_t r0 = v_, r1 = q_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    r0 -= t * r1;
    std::swap(r0, r1);
    s0 -= t * s1;
    std::swap(s0, s1);
  }
  return Fp(s0, q_);
}

}  // namespace qm
