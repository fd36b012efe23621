#pragma once

#include <optional>

#include "qm/binary_form.hpp"

namespace qm {

/// [s*K + t*L | const_block] as a matrix of binary forms. Every minor of
/// such a matrix is homogeneous (degree = number of pencil columns used),
/// so fraction-free elimination stays inside BinaryForm.
Matrix<BinaryForm> pencil_matrix(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat,
                                 const Matrix<Rat>* const_block = nullptr);

/// Rank of s*K + t*L over the rational function field.
int pencil_generic_rank(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat);

/// Rank of [s*K + t*L | const_block] over the rational function field.
int pencil_generic_rank(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat,
                        const Matrix<Rat>& const_block);

/// det(s*K + t*L) for square K, L.
BinaryForm pencil_det(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat);

inline constexpr int kMinorRowLimit = 8;
inline constexpr long long kMinorCountLimit = 200000;

/// Normalized gcd of all r x r minors of [s*K + t*L | const_block];
/// the zero form when every minor vanishes identically. Degree 0 with the
/// full generic rank means the matrix keeps rank r at every (s,t) != 0.
BinaryForm pencil_minors_gcd(const Matrix<Rat>& k_mat, const Matrix<Rat>& l_mat,
                             const std::optional<Matrix<Rat>>& const_block, int r);

}  // namespace qm
