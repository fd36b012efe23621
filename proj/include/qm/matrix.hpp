#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "qm/errors.hpp"

namespace qm {

// Scalar requirements: copy, ==, is_zero(), zero(), one(), unary -, +, -, *,
// div_exact (exact when the algorithm guarantees divisibility), str().

/// Dense row-major matrix over an exact scalar domain. A prototype zero
/// element is kept so that empty matrices still know their domain.
template <class K>
class Matrix {
 public:
  Matrix(int rows, int cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero), e_(checked_size(rows, cols), zero) {}
  Matrix(int rows, int cols, std::vector<K> entries)
      : rows_(rows), cols_(cols),
        zero_(entries.empty() ? throw ShapeError("empty entry list needs a prototype")
                              : entries.front().zero()),
        e_(std::move(entries)) {
    if (e_.size() != checked_size(rows, cols))
      throw ShapeError("entry count does not match matrix shape");
  }

  static Matrix identity(int n, const K& zero) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = zero.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const K& zero() const { return zero_; }
  K one() const { return zero_.one(); }

  K& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const K& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const K& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const K& b = o.at(k, j);
          if (!b.is_zero()) r.at(i, j) += a * b;
        }
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (K& x : r.e_) x = -x;
    return r;
  }
  Matrix scaled(const K& c) const {
    Matrix r = *this;
    for (K& x : r.e_) x = x * c;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix row(int i) const { return submatrix({i}, all_cols()); }
  Matrix col(int j) const { return submatrix(all_rows(), {j}); }

  Matrix submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
    Matrix r(static_cast<int>(ri.size()), static_cast<int>(ci.size()), zero_);
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) r.at(i, j) = at(ri[i], ci[j]);
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
    }
    return s + "]";
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::vector<int> all_rows() const {
    std::vector<int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = i;
    return v;
  }
  std::vector<int> all_cols() const {
    std::vector<int> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = j;
    return v;
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError("matrix shape mismatch");
  }

  int rows_, cols_;
  K zero_;
  std::vector<K> e_;
};

template <class K>
Matrix<K> hcat(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hcat row mismatch");
  Matrix<K> r(a.rows(), a.cols() + b.cols(), a.zero());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

template <class K>
Matrix<K> vcat(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vcat column mismatch");
  Matrix<K> r(a.rows() + b.rows(), a.cols(), a.zero());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

/// Pivot preference hook for fraction-free elimination; lower is better.
template <class K>
int elimination_weight(const K&) {
  return 0;
}

namespace detail {

// One-pass Bareiss elimination with full pivoting. Returns (rank, sign,
// last pivot). Intermediate entries are minors of the input, so div_exact
// divides evenly over any integral domain.
template <class K>
struct BareissResult {
  int rank;
  int sign;
  K last_pivot;
};

template <class K>
BareissResult<K> bareiss(Matrix<K> m) {
  const int n = m.rows(), c = m.cols();
  const int steps = n < c ? n : c;
  K prev = m.one();
  K last = m.one();
  int sign = 1;
  int k = 0;
  for (; k < steps; ++k) {
    int pi = -1, pj = -1, pw = 0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < c; ++j) {
        if (m.at(i, j).is_zero()) continue;
        int w = elimination_weight(m.at(i, j));
        if (pi < 0 || w < pw) { pi = i; pj = j; pw = w; }
      }
    if (pi < 0) break;
    if (pi != k) {
      sign = -sign;
      for (int j = 0; j < c; ++j) std::swap(m.at(pi, j), m.at(k, j));
    }
    if (pj != k) {
      sign = -sign;
      for (int i = 0; i < n; ++i) std::swap(m.at(i, pj), m.at(i, k));
    }
    const K pivot = m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < c; ++j)
        m.at(i, j) = (pivot * m.at(i, j) - m.at(i, k) * m.at(k, j)).div_exact(prev);
      m.at(i, k) = m.zero();
    }
    prev = pivot;
    last = pivot;
  }
  return {k, sign, k == 0 ? m.one() : last};
}

}  // namespace detail

/// Rank by fraction-free (Bareiss) elimination with full pivoting.
template <class K>
int rank_bareiss(const Matrix<K>& m) {
  return detail::bareiss(m).rank;
}

/// Determinant of a square matrix by fraction-free elimination.
template <class K>
K det_bareiss(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  if (m.rows() == 0) return m.one();
  auto r = detail::bareiss(m);
  if (r.rank < m.rows()) return m.zero();
  return r.sign > 0 ? r.last_pivot : -r.last_pivot;
}

/// In-place reduced row echelon form over a field. Returns pivot columns.
template <class K>
std::vector<int> rref_in_place(Matrix<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const K inv_led = m.one().div_exact(m.at(row, col));
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv_led;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const K f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Inverse over a field; throws ShapeError on singular input.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const int n = m.rows();
  Matrix<K> aug = hcat(m, Matrix<K>::identity(n, m.zero()));
  auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots.back() >= n))
    throw ShapeError("matrix is singular");
  std::vector<int> rows(n), cols(n);
  for (int i = 0; i < n; ++i) rows[i] = i, cols[i] = n + i;
  return aug.submatrix(rows, cols);
}

}  // namespace qm
