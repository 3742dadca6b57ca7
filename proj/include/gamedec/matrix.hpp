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

#ifndef GAMEDEC_MATRIX_HPP_
#define GAMEDEC_MATRIX_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "gamedec/rational.hpp"

namespace gamedec {

// Dense matrix of exact rationals, row-major. Arithmetic is exact; there is
// no rounding anywhere in the library.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);  // zero-filled

  static RatMatrix identity(int n);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix row_vector(const std::vector<Rat>& v);
  static RatMatrix column_vector(const std::vector<Rat>& v);
  static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
  static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
  static RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  Rat* data() { return data_.data(); }
  const Rat* data() const { return data_.data(); }

  RatMatrix transposed() const;
  std::vector<Rat> column(int j) const;
  void set_column(int j, const std::vector<Rat>& v);
  bool is_zero() const;
  void swap_rows(int a, int b);

  bool operator==(const RatMatrix& other) const;

  std::string to_string() const;  // debug aid

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> operator*(const RatMatrix& a, const std::vector<Rat>& v);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a);
RatMatrix operator*(const Rat& s, const RatMatrix& a);

// Copies the named columns, in the given order.
RatMatrix select_columns(const RatMatrix& m, const std::vector<int>& cols);

std::vector<Rat> add(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);
bool is_zero(const std::vector<Rat>& v);

}  // namespace gamedec

#endif  // GAMEDEC_MATRIX_HPP_
