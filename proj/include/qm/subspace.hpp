#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qm/fp.hpp"
#include "qm/matrix.hpp"

namespace qm {

/// Linear subspace of k^ambient, stored as a reduced row echelon basis
/// (rows = basis vectors, no zero rows). RREF is unique per subspace, so
/// equality is basis equality.
template <class K>
class Subspace {
 public:
  static Subspace zero(int ambient, const K& proto) {
    return Subspace(ambient, Matrix<K>(0, ambient, proto));
  }
  static Subspace full(int ambient, const K& proto) {
    return Subspace(ambient, Matrix<K>::identity(ambient, proto));
  }

  /// Span of the rows of `rows`; reduces to canonical form.
  static Subspace from_span_rows(Matrix<K> rows) {
    auto pivots = rref_in_place(rows);
    const int d = static_cast<int>(pivots.size());
    std::vector<int> keep(d);
    for (int i = 0; i < d; ++i) keep[i] = i;
    std::vector<int> cols(rows.cols());
    for (int j = 0; j < rows.cols(); ++j) cols[j] = j;
    return Subspace(rows.cols(), rows.submatrix(keep, cols));
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const K& proto() const { return basis_.zero(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Membership test for a single row vector (1 x ambient).
  bool contains_vector(const Matrix<K>& v) const {
    if (v.rows() != 1 || v.cols() != ambient_)
      throw ShapeError("vector has wrong ambient dimension");
    Matrix<K> r = v;
    reduce_row(r);
    return r.is_zero();
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Lexicographic comparison of (dim, row-major basis entries).
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (int i = 0; i < basis_.rows(); ++i)
      for (int j = 0; j < basis_.cols(); ++j) {
        if (basis_.at(i, j) < o.basis_.at(i, j)) return true;
        if (o.basis_.at(i, j) < basis_.at(i, j)) return false;
      }
    return false;
  }

 private:
  Subspace(int ambient, Matrix<K> basis) : ambient_(ambient), basis_(std::move(basis)) {}

  // Reduce a row vector against the RREF basis; zero iff in the span.
  void reduce_row(Matrix<K>& r) const {
    int col = 0;
    for (int i = 0; i < basis_.rows(); ++i) {
      while (col < ambient_ && basis_.at(i, col).is_zero()) ++col;
      if (col >= ambient_) break;
      const K f = r.at(0, col);
      if (!f.is_zero())
        for (int j = col; j < ambient_; ++j)
          r.at(0, j) = r.at(0, j) - f * basis_.at(i, j);
    }
  }

  int ambient_;
  Matrix<K> basis_;
};

/// Column space of m, inside k^rows.
template <class K>
Subspace<K> image(const Matrix<K>& m) {
  return Subspace<K>::from_span_rows(m.transpose());
}

/// Null space of m, inside k^cols.
template <class K>
Subspace<K> kernel(Matrix<K> m) {
  const int n = m.cols();
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix<K> basis(n - static_cast<int>(pivots.size()), n, m.zero());
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    basis.at(row, j) = m.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(row, pivots[i]) = -m.at(static_cast<int>(i), j);
    ++row;
  }
  return Subspace<K>::from_span_rows(basis);
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ShapeError("subspace sum: ambient dimension mismatch");
  return Subspace<K>::from_span_rows(vcat(a.basis(), b.basis()));
}

/// Rows of a matrix whose kernel is the given subspace (dual constraints).
template <class K>
Matrix<K> dual_constraints(const Subspace<K>& s) {
  return kernel(s.basis()).basis();
}

template <class K>
Subspace<K> subspace_intersect(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ShapeError("subspace intersect: ambient dimension mismatch");
  return kernel(vcat(dual_constraints(a), dual_constraints(b)));
}

/// contains(a, b) <=> b is a subspace of a.
template <class K>
bool subspace_contains(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ShapeError("subspace contains: ambient dimension mismatch");
  for (int i = 0; i < b.dim(); ++i)
    if (!a.contains_vector(b.basis().row(i))) return false;
  return true;
}

/// Image of [b, ab, a^2 b, ..., a^(n-1) b]: the smallest a-invariant
/// subspace containing im b.
template <class K>
Subspace<K> krylov_image(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != a.cols()) throw ShapeError("krylov_image: a must be square");
  if (b.rows() != a.rows()) throw ShapeError("krylov_image: shape mismatch");
  Matrix<K> block = b, acc = b;
  for (int j = 1; j < a.rows(); ++j) {
    block = a * block;
    acc = hcat(acc, block);
  }
  return image(acc);
}

/// Kernel of [c; ca; ...; ca^(n-1)]: the largest a-invariant subspace
/// inside ker c.
template <class K>
Subspace<K> krylov_kernel(const Matrix<K>& c, const Matrix<K>& a) {
  if (a.rows() != a.cols()) throw ShapeError("krylov_kernel: a must be square");
  if (c.cols() != a.rows()) throw ShapeError("krylov_kernel: shape mismatch");
  Matrix<K> block = c, acc = c;
  for (int j = 1; j < a.rows(); ++j) {
    block = block * a;
    acc = vcat(acc, block);
  }
  return kernel(acc);
}

inline constexpr std::uint64_t kSubspaceEnumBudget = 4096;

/// All subspaces of F_q^n in canonical RREF form, ordered by
/// (dim, lexicographic basis). Guarded by q^n <= budget.
std::vector<Subspace<Fp>> enumerate_subspaces(int n, std::uint32_t q,
                                              std::uint64_t budget = kSubspaceEnumBudget);

}  // namespace qm
