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

#include "quadricode/matrix.hpp"

#include <stdexcept>

namespace quadricode {

Matrix::Matrix(Field field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_.valid()) throw std::invalid_argument("invalid field");
}

Matrix Matrix::identity(const Field& field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<uint32_t>>& rows) {
  const size_t r = rows.size();
  const size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(field, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<uint32_t> Matrix::row(size_t r) const {
  return {data_.begin() + static_cast<ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(field_ == rhs.field_)) throw std::invalid_argument("field mismatch");
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const uint32_t a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) {
        const uint32_t prod = field_.mul(a, rhs.at(k, j));
        out.set(i, j, field_.add(out.at(i, j), prod));
      }
    }
  }
  return out;
}

std::vector<uint32_t> Matrix::left_multiply(const std::vector<uint32_t>& v) const {
  if (v.size() != rows_) throw std::invalid_argument("dimension mismatch");
  std::vector<uint32_t> out(cols_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < cols_; ++j)
      out[j] = field_.add(out[j], field_.mul(v[i], at(i, j)));
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefForm rref(const Matrix& m) {
  RrefForm out{m, 0, {}};
  Matrix& a = out.reduced;
  const Field& f = m.field();
  const size_t rows = m.rows(), cols = m.cols();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (size_t j = 0; j < cols; ++j) {
        const uint32_t tmp = a.at(rank, j);
        a.set(rank, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
    }
    const uint32_t scale = f.inv(a.at(rank, col));
    if (scale != 1) {
      for (size_t j = col; j < cols; ++j) a.set(rank, j, f.mul(scale, a.at(rank, j)));
    }
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const uint32_t factor = a.at(r, col);
      if (factor == 0) continue;
      for (size_t j = col; j < cols; ++j)
        a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(rank, j))));
    }
    out.pivot_cols.push_back(static_cast<uint32_t>(col));
    ++rank;
  }
  out.rank = static_cast<uint32_t>(rank);
  return out;
}

uint32_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
  const RrefForm f = rref(m);
  const Field& fld = m.field();
  const size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (uint32_t c : f.pivot_cols) is_pivot[c] = true;
  Matrix out(fld, cols - f.rank, cols);
  size_t r = 0;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    out.set(r, free, 1);
    for (size_t i = 0; i < f.pivot_cols.size(); ++i)
      out.set(r, f.pivot_cols[i], fld.neg(f.reduced.at(i, free)));
    ++r;
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (size_t j1 = 0; j1 < a.cols(); ++j1) {
      const uint32_t v = a.at(i1, j1);
      if (v == 0) continue;
      for (size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (size_t j2 = 0; j2 < b.cols(); ++j2) {
          out.set(i1 * b.rows() + i2, j1 * b.cols() + j2, f.mul(v, b.at(i2, j2)));
        }
      }
    }
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch");
  if (a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
  return out;
}

Matrix select_columns(const Matrix& m, const std::vector<size_t>& cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= m.cols()) throw std::out_of_range("column index out of range");
    for (size_t i = 0; i < m.rows(); ++i) out.set(i, j, m.at(i, cols[j]));
  }
  return out;
}

Matrix scale_columns(const Matrix& m, const std::vector<uint32_t>& scalars) {
  if (scalars.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
  Matrix out = m;
  const Field& f = m.field();
  for (size_t j = 0; j < m.cols(); ++j) {
    if (scalars[j] == 0) throw std::invalid_argument("column scalars must be nonzero");
    for (size_t i = 0; i < m.rows(); ++i) out.set(i, j, f.mul(m.at(i, j), scalars[j]));
  }
  return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.cols()) return false;
  const RrefForm ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (size_t i = 0; i < ra.rank; ++i)
    if (ra.reduced.row(i) != rb.reduced.row(i)) return false;
  return true;
}

bool row_space_contains(const Matrix& a, const std::vector<uint32_t>& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("dimension mismatch");
  const Matrix vm = Matrix::from_rows(a.field(), {v});
  return rank(vstack(a, vm)) == rank(a);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  const size_t n = m.rows();
  const RrefForm f = rref(vstack(m.transpose(), Matrix::identity(m.field(), n)).transpose());
  // The augmented matrix [m | I] reduced: invertible iff the left block is I.
  if (f.rank != n || (n > 0 && f.pivot_cols[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  std::vector<size_t> right(n);
  for (size_t j = 0; j < n; ++j) right[j] = n + j;
  return select_columns(f.reduced, right);
}

std::vector<uint32_t> solve(const Matrix& a, const std::vector<uint32_t>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), b[i]);
  }
  const RrefForm f = rref(aug);
  for (uint32_t c : f.pivot_cols)
    if (c == a.cols()) throw std::domain_error("inconsistent linear system");
  if (f.rank != a.cols()) throw std::domain_error("underdetermined linear system");
  std::vector<uint32_t> x(a.cols(), 0);
  for (size_t i = 0; i < f.rank; ++i) x[f.pivot_cols[i]] = f.reduced.at(i, a.cols());
  return x;
}

Matrix subfield_subcode(const Matrix& gen) {
  const Field& big = gen.field();
  if (!big.has_subfield()) throw std::invalid_argument("field has no designated subfield");
  const Field& base = big.subfield();
  const uint32_t d = big.subfield_index();
  const Matrix h = kernel(gen);
  const SubfieldDecomposition dec(big, big.extension_basis());
  Matrix hq(base, h.rows() * d, gen.cols());
  for (size_t r = 0; r < h.rows(); ++r) {
    for (size_t c = 0; c < gen.cols(); ++c) {
      const auto coords = dec.coords(h.at(r, c));
      for (uint32_t k = 0; k < d; ++k) hq.set(r * d + k, c, coords[k]);
    }
  }
  return kernel(hq);
}

}  // namespace quadricode
