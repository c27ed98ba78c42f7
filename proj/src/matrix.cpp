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

#include "brauer/matrix.hpp"

#include <sstream>

#include "brauer/detail/polyops.hpp"

namespace brauer {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, FieldElement::zero(field_));
}

Matrix Matrix::identity(const FieldPtr& field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return Matrix(field, 0, 0);
  Matrix m(field, rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ValidationError("ragged matrix rows");
    for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Matrix Matrix::map(const std::function<FieldElement(const FieldElement&)>& fn) const {
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fn(a_[i]);
  return out;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw ValidationError("matrix-vector dimension mismatch");
  std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] = out[r] + at(r, c) * v[c];
  return out;
}

bool Matrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (r == c) {
        if (at(r, c) != at(0, 0)) return false;
      } else if (!at(r, c).is_zero()) {
        return false;
      }
    }
  return true;
}

bool Matrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

FieldElement Matrix::trace() const {
  if (rows_ != cols_) throw ValidationError("trace of a non-square matrix");
  FieldElement t = FieldElement::zero(field_);
  for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

FieldElement Matrix::det() const {
  if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
  Matrix m = *this;
  FieldElement d = FieldElement::one(field_);
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return FieldElement::zero(field_);
    if (pivot != col) {
      for (size_t c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      d = -d;
    }
    d = d * m.at(col, col);
    FieldElement inv = m.at(col, col).inverse();
    for (size_t r = col + 1; r < rows_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      FieldElement factor = m.at(r, col) * inv;
      for (size_t c = col; c < cols_; ++c)
        m.at(r, c) = m.at(r, c) - factor * m.at(col, c);
    }
  }
  return d;
}

std::vector<size_t> Matrix::rref_in_place() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
    FieldElement inv = at(row, col).inverse();
    for (size_t c = col; c < cols_; ++c) at(row, c) = at(row, c) * inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      FieldElement factor = at(r, col);
      for (size_t c = col; c < cols_; ++c) at(r, c) = at(r, c) - factor * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref_in_place().size();
}

std::vector<std::vector<FieldElement>> Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<size_t> pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
    v[free] = FieldElement::one(field_);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElement>> Matrix::solve(const std::vector<FieldElement>& b) const {
  if (b.size() != rows_) throw ValidationError("solve: dimension mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<size_t> pivots = aug.rref_in_place();
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<FieldElement> x(cols_, FieldElement::zero(field_));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < rows_; ++r) {
    if (r) os << ";";
    os << "[";
    for (size_t c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << at(r, c).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Subspace::Subspace(FieldPtr field, size_t ambient,
                   std::vector<std::vector<FieldElement>> spanning)
    : field_(std::move(field)), ambient_(ambient) {
  if (spanning.empty()) return;
  Matrix m = Matrix::from_rows(field_, std::move(spanning));
  if (m.cols() != ambient_) throw ValidationError("subspace vector dimension mismatch");
  std::vector<size_t> pivots = m.rref_in_place();
  for (size_t i = 0; i < pivots.size(); ++i) {
    std::vector<FieldElement> row;
    row.reserve(ambient_);
    for (size_t c = 0; c < ambient_; ++c) row.push_back(m.at(i, c));
    basis_.push_back(std::move(row));
  }
}

bool Subspace::contains(const std::vector<FieldElement>& v) const {
  if (v.size() != ambient_) throw ValidationError("subspace vector dimension mismatch");
  if (basis_.empty()) {
    for (auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  std::vector<std::vector<FieldElement>> rows = basis_;
  rows.push_back(v);
  Matrix m = Matrix::from_rows(field_, std::move(rows));
  return m.rank() == basis_.size();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Matrix multiplication_matrix(const FieldElement& x) {
  const FieldPtr& f = x.field();
  if (!f->is_extension()) throw ValidationError("multiplication matrix needs an extension element");
  long m = f->degree();
  Matrix out(f->base(), m, m);
  FieldElement power = FieldElement::one(f);
  for (long j = 0; j < m; ++j) {
    FieldElement prod = x * power;
    for (long i = 0; i < m; ++i) out.at(i, j) = prod.coords()[i];
    if (j + 1 < m) power = power * FieldElement::generator(f);
  }
  return out;
}

Matrix sigma_matrix(const FieldPtr& ext) {
  if (!ext || !ext->is_extension() || ext->sigma_image().empty())
    throw ValidationError("sigma matrix needs a cyclic extension");
  long m = ext->degree();
  Matrix out(ext->base(), m, m);
  const auto& images = ext->sigma_basis_images();
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < m; ++i) out.at(i, j) = images[j][i];
  return out;
}

namespace {

using detail::Coeffs;

// determinant of a matrix of polynomials by cofactor expansion along the
// first column; n is small everywhere this is used
Coeffs poly_det(const FieldPtr& f, const std::vector<std::vector<Coeffs>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Coeffs acc;
  for (size_t r = 0; r < n; ++r) {
    if (detail::is_zero_poly(m[r][0])) continue;
    std::vector<std::vector<Coeffs>> minor;
    minor.reserve(n - 1);
    for (size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      std::vector<Coeffs> row(m[i].begin() + 1, m[i].end());
      minor.push_back(std::move(row));
    }
    Coeffs term = detail::poly_mul(f, m[r][0], poly_det(f, minor));
    acc = (r % 2 == 0) ? detail::poly_add(f, acc, term) : detail::poly_sub(f, acc, term);
  }
  return acc;
}

}  // namespace

std::vector<FieldElement> char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("characteristic polynomial needs a square matrix");
  if (a.rows() > 8) throw UnsupportedError("characteristic polynomial beyond supported size");
  const FieldPtr& f = a.field();
  size_t n = a.rows();
  std::vector<std::vector<Coeffs>> m(n, std::vector<Coeffs>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      Coeffs entry;
      if (!a.at(r, c).is_zero()) entry.push_back(-a.at(r, c));
      if (r == c) {
        entry.resize(2, FieldElement::zero(f));
        entry[1] = FieldElement::one(f);
      }
      detail::trim(entry);
      m[r][c] = std::move(entry);
    }
  Coeffs result = poly_det(f, m);
  result.resize(n + 1, FieldElement::zero(f));
  return result;
}

}  // namespace brauer
