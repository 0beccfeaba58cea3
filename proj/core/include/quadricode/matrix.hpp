// Copyright 2026 The quadricode developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUADRICODE_MATRIX_HPP
#define QUADRICODE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quadricode/field.hpp"

namespace quadricode {

// Dense row-major matrix over a finite field, entries stored as canonical
// encodings.  All reductions are deterministic: pivots are chosen top-down
// and left-to-right, so equal inputs give bitwise equal outputs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, size_t rows, size_t cols);
  static Matrix identity(const Field& field, size_t n);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<uint32_t>>& rows);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { data_[r * cols_ + c] = v; }
  std::vector<uint32_t> row(size_t r) const;
  const std::vector<uint32_t>& data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  // v * M for a row vector v of length rows().
  std::vector<uint32_t> left_multiply(const std::vector<uint32_t>& v) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> data_;
};

struct RrefForm {
  Matrix reduced;
  uint32_t rank = 0;
  std::vector<uint32_t> pivot_cols;
};

RrefForm rref(const Matrix& m);
uint32_t rank(const Matrix& m);

// Rows form a basis of the right kernel {x : m x^T = 0}, ordered by the
// free column each basis vector is supported on.
Matrix kernel(const Matrix& m);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix select_columns(const Matrix& m, const std::vector<size_t>& cols);
Matrix scale_columns(const Matrix& m, const std::vector<uint32_t>& scalars);

bool row_space_equal(const Matrix& a, const Matrix& b);
bool row_space_contains(const Matrix& a, const std::vector<uint32_t>& v);

// Invert a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
// Solve a x = b for a column vector x; throws when inconsistent or
// underdetermined.
std::vector<uint32_t> solve(const Matrix& a, const std::vector<uint32_t>& b);

// Generator matrix of the subcode of row-span(gen) consisting of words
// with all coordinates in the designated subfield of gen's field.  The
// result lives over that subfield.
Matrix subfield_subcode(const Matrix& gen);

}  // namespace quadricode

#endif  // QUADRICODE_MATRIX_HPP
