#pragma once

#include <optional>
#include <vector>

#include "qm/pencil.hpp"
#include "qm/quiver.hpp"
#include "qm/rational.hpp"
#include "qm/subspace.hpp"

namespace qm {

/// Classical state-space system x' = Ax + Bu, y = Cx + Du.
template <class F>
struct SigmaSystemT {
  int n, m, p;
  Matrix<F> A, B, C, D;

  void validate() const {
    if (n < 1 || m < 0 || p < 0) throw ShapeError("sigma system needs n >= 1, m, p >= 0");
    if (A.rows() != n || A.cols() != n || B.rows() != n || B.cols() != m ||
        C.rows() != p || C.cols() != n || D.rows() != p || D.cols() != m)
      throw ShapeError("sigma system matrix shapes inconsistent");
  }
};
using SigmaSystem = SigmaSystemT<Rat>;

/// Pencil system K w' + L w + M xi = 0 with K, L of shape (n+p) x n and
/// M of shape (n+p) x (p+m).
struct LomadzeSystem {
  int n, m, p;
  Matrix<Rat> K, L, M;

  void validate() const;
};

/// Descriptor system E x' = Ax + Bu, F y = Cx + Du.
struct HelmkeSystem {
  int n, m, p;
  Matrix<Rat> E, A, B, C, D, F;

  void validate() const;
};

/// Tuple of invertible square blocks; inverses are computed eagerly so a
/// singular block fails at construction.
class GroupElement {
 public:
  explicit GroupElement(std::vector<Matrix<Rat>> blocks);
  static GroupElement identity(const std::vector<int>& sizes);

  const Matrix<Rat>& block(std::size_t i) const { return blocks_.at(i); }
  const Matrix<Rat>& inv(std::size_t i) const { return inverses_.at(i); }
  std::size_t size() const { return blocks_.size(); }

 private:
  std::vector<Matrix<Rat>> blocks_;
  std::vector<Matrix<Rat>> inverses_;
};

template <class F>
bool sigma_controllable(const SigmaSystemT<F>& s) {
  s.validate();
  return krylov_image(s.A, s.B).is_full();
}

template <class F>
bool sigma_observable(const SigmaSystemT<F>& s) {
  s.validate();
  return krylov_kernel(s.C, s.A).is_zero();
}

bool lomadze_controllable(const LomadzeSystem& s);
bool lomadze_observable(const LomadzeSystem& s);
/// rk [K | first p columns of M] = n+p.
bool lomadze_regular(const LomadzeSystem& s);
bool helmke_controllable(const HelmkeSystem& s);

LomadzeSystem embed_sigma_lomadze(const SigmaSystem& s);
HelmkeSystem embed_sigma_helmke(const SigmaSystem& s);

/// Group inclusions matching the embeddings: g -> (g, g + id_p) and
/// g -> (g, g, id_p).
GroupElement lomadze_group_of_sigma(const Matrix<Rat>& g0, int p);
GroupElement helmke_group_of_sigma(const Matrix<Rat>& g0, int p);

SigmaSystem act_sigma(const GroupElement& g, const SigmaSystem& s);
LomadzeSystem act_lomadze(const GroupElement& g, const LomadzeSystem& s);
HelmkeSystem act_helmke(const GroupElement& g, const HelmkeSystem& s);

/// (K, L, M) -> (a K + b L, c K + d L, M h) for omega = [[a,b],[c,d]].
LomadzeSystem transform_T(const Matrix<Rat>& omega, const Matrix<Rat>& h,
                          const LomadzeSystem& s);

struct RegularizeResult {
  Matrix<Rat> omega;
  Matrix<Rat> h;
};

/// Finds (omega, h) with transform_T(omega, h, s) regular, by sampling
/// height-ordered coprime points (s0, t0) until rk[s0 K + t0 L] = n and
/// rk[s0 K + t0 L, M] = n+p, then permuting columns of M. Returns nullopt
/// when no sample point works (then none exists).
std::optional<RegularizeResult> regularize(const LomadzeSystem& s);

/// Dimension of {(x0, x1) : x1 K = K x0, x1 L = L x0, x1 M = 0}, the Lie
/// algebra of the stabilizer.
int stabilizer_lie_dimension(const LomadzeSystem& s);
/// Same with blocks (x0, x1, x2) and the six defining equations.
int stabilizer_lie_dimension(const HelmkeSystem& s);

/// (E, A, B, C, D, F) -> (E, A, B) as an output-free pencil system.
LomadzeSystem forget_output(const HelmkeSystem& s);

long long moduli_dimension(int n, int m, int p);

/// Representation of the matching quiver with maps [A, B, C, D].
template <class F>
Representation<F> to_representation(const SigmaSystemT<F>& s) {
  s.validate();
  Representation<F> rep{sigma_quiver(s.n, s.m, s.p), {s.A, s.B, s.C, s.D}};
  rep.validate();
  return rep;
}

/// Representation of the pencil quiver with maps [K, L, M] over F_q.
template <class F>
Representation<F> lomadze_representation(int n, int m, int p, const Matrix<F>& k_mat,
                                         const Matrix<F>& l_mat, const Matrix<F>& m_mat) {
  Representation<F> rep{lomadze_quiver(n, m, p), {k_mat, l_mat, m_mat}};
  rep.validate();
  return rep;
}

}  // namespace qm
