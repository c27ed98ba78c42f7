/*
   Copyright 2026 the brauercalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_MATRIX_HPP
#define BRAUER_MATRIX_HPP

#include <functional>
#include <vector>

#include "brauer/field.hpp"

namespace brauer {

/// Dense matrix over an exact field, with Gaussian elimination primitives.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, size_t rows, size_t cols);
  static Matrix identity(const FieldPtr& field, size_t n);
  static Matrix from_rows(const FieldPtr& field, std::vector<std::vector<FieldElement>> rows);

  const FieldPtr& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldElement& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  Matrix transpose() const;
  Matrix map(const std::function<FieldElement(const FieldElement&)>& fn) const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  bool is_scalar() const;
  bool is_zero() const;
  FieldElement trace() const;
  FieldElement det() const;

  /// Reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref_in_place();
  size_t rank() const;
  /// Basis of the right kernel (vectors x with A x = 0).
  std::vector<std::vector<FieldElement>> kernel_basis() const;
  /// One solution of A x = b, if any.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

  std::string str() const;

 private:
  FieldPtr field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

/**
 * Row space in canonical reduced echelon form. Two subspaces are equal iff
 * their echelon bases coincide.
 */
class Subspace {
 public:
  Subspace() = default;
  /// Canonicalizes the spanning rows (rref, zero rows dropped).
  Subspace(FieldPtr field, size_t ambient, std::vector<std::vector<FieldElement>> spanning);
  size_t dim() const { return basis_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<std::vector<FieldElement>>& basis() const { return basis_; }
  bool contains(const std::vector<FieldElement>& v) const;
  bool operator==(const Subspace& o) const;

 private:
  FieldPtr field_;
  size_t ambient_ = 0;
  std::vector<std::vector<FieldElement>> basis_;
};

/// Matrix of multiplication by x on an extension field, over the base
/// (columns are the coordinates of x * xbar^j).
Matrix multiplication_matrix(const FieldElement& x);

/// Matrix of the generator automorphism sigma as a base-linear map.
Matrix sigma_matrix(const FieldPtr& ext);

/// Characteristic polynomial det(x*I - A) as constant-first coefficients,
/// by exact cofactor expansion (intended for small matrices).
std::vector<FieldElement> char_poly(const Matrix& a);

}  // namespace brauer

#endif  // BRAUER_MATRIX_HPP
