#include "qm/pencil.hpp"

namespace qm {

namespace {

void require_same_shape(const Matrix<Rat>& a, const Matrix<Rat>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("pencil matrices must have equal shapes");
}

long long choose_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMinorCountLimit) return kMinorCountLimit + 1;
  }
  return r;
}

// Lexicographic combinations of size k from {0..n-1}.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

Matrix<BinaryForm> pencil_matrix(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat,
                                 const Matrix<Rat>* const_block) {
  require_same_shape(k_mat, l_mat);
  const int rows = k_mat.rows();
  int cols = k_mat.cols();
  if (const_block) {
    if (const_block->rows() != rows)
      throw ShapeError("constant block row count mismatch");
    cols += const_block->cols();
  }
  Matrix<BinaryForm> m(rows, cols, BinaryForm());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < k_mat.cols(); ++j)
      m.at(i, j) = BinaryForm::linear(k_mat.at(i, j), l_mat.at(i, j));
    if (const_block)
      for (int j = 0; j < const_block->cols(); ++j)
        m.at(i, k_mat.cols() + j) = BinaryForm(const_block->at(i, j));
  }
  return m;
}

int pencil_generic_rank(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat) {
  return rank_bareiss(pencil_matrix(k_mat, l_mat));
}

int pencil_generic_rank(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat,
                        const Matrix<Rat>& const_block) {
  return rank_bareiss(pencil_matrix(k_mat, l_mat, &const_block));
}

BinaryForm pencil_det(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat) {
  if (k_mat.rows() != k_mat.cols())
    throw ShapeError("pencil determinant needs square matrices");
  return det_bareiss(pencil_matrix(k_mat, l_mat));
}

BinaryForm pencil_minors_gcd(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat,
                             const std::optional<Matrix<Rat>>& const_block, int r) {
  const Matrix<Rat>* cb = const_block ? &*const_block : nullptr;
  Matrix<BinaryForm> m = pencil_matrix(k_mat, l_mat, cb);
  if (r < 0 || r > std::min(m.rows(), m.cols()))
    throw ShapeError("minor size out of range");
  if (r == 0) return BinaryForm(Rat(1));
  if (m.rows() > kMinorRowLimit)
    throw BudgetError("pencil too large for minor enumeration");
  if (choose_ll(m.rows(), r) * choose_ll(m.cols(), r) > kMinorCountLimit)
    throw BudgetError("minor enumeration budget exceeded");

  BinaryForm g;
  std::vector<int> ri = first_combination(r);
  do {
    std::vector<int> ci = first_combination(r);
    do {
      g = form_gcd(g, det_bareiss(m.submatrix(ri, ci)));
      // A nonzero constant gcd cannot change; stop enumerating.
      if (!g.is_zero() && g.is_constant()) return g;
    } while (next_combination(ci, m.cols()));
  } while (next_combination(ri, m.rows()));
  return g;
}

}  // namespace qm
