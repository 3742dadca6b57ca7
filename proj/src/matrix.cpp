// Copyright 2026 The gamedec Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamedec/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "gamedec/errors.hpp"
#include "gamedec/kernels.hpp"

namespace gamedec {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  RatMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw DimensionError("ragged rows in matrix literal");
    }
    int j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatMatrix RatMatrix::row_vector(const std::vector<Rat>& v) {
  RatMatrix m(1, static_cast<int>(v.size()));
  for (size_t j = 0; j < v.size(); ++j) m(0, static_cast<int>(j)) = v[j];
  return m;
}

RatMatrix RatMatrix::column_vector(const std::vector<Rat>& v) {
  RatMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
  RatMatrix m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
  RatMatrix m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

RatMatrix RatMatrix::kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int r = 0; r < b.rows(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
          m(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
      }
    }
  }
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

std::vector<Rat> RatMatrix::column(int j) const {
  if (j < 0 || j >= cols_) throw DimensionError("column index out of range");
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void RatMatrix::set_column(int j, const std::vector<Rat>& v) {
  if (j < 0 || j >= cols_ || static_cast<int>(v.size()) != rows_) {
    throw DimensionError("set_column: shape mismatch");
  }
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat& x) { return x == 0; });
}

void RatMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string RatMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) {
      out << rat_to_string((*this)(i, j)) << (j + 1 < cols_ ? " " : "");
    }
    out << (i + 1 < rows_ ? "\n" : "]\n");
  }
  return out.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

std::vector<Rat> operator*(const RatMatrix& a, const std::vector<Rat>& v) {
  if (a.cols() != static_cast<int>(v.size())) {
    throw DimensionError("matvec: shape mismatch");
  }
  std::vector<Rat> out(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i) {
    Rat acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("add: shape mismatch");
  }
  RatMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("sub: shape mismatch");
  }
  RatMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a) {
  RatMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
  RatMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

RatMatrix select_columns(const RatMatrix& m, const std::vector<int>& cols) {
  RatMatrix out(m.rows(), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || cols[j] >= m.cols()) {
      throw DimensionError("select_columns: index out of range");
    }
    for (int i = 0; i < m.rows(); ++i) {
      out(i, static_cast<int>(j)) = m(i, cols[j]);
    }
  }
  return out;
}

std::vector<Rat> add(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw DimensionError("vector add: size mismatch");
  std::vector<Rat> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sub: size mismatch");
  std::vector<Rat> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace gamedec
