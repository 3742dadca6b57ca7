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

#ifndef GAMEDEC_KERNELS_HPP_
#define GAMEDEC_KERNELS_HPP_

#include "gamedec/rational.hpp"

namespace gamedec::kernels {

// The hot inner loops (dense rational matmul, row elimination) exist twice:
// a serial reference and an OpenMP version. Results are bit-identical —
// every output entry is computed independently — so the serial build is the
// correctness oracle for the parallel one.
enum class Mode {
  kSerial,
  kParallel,
  kAuto,  // parallel when threads are available and the matrix is big enough
};

void set_mode(Mode mode);
Mode mode();

int max_threads();

// c = a * b with a m-by-n and b n-by-p, all row-major. c must hold m*p
// entries; previous contents are discarded.
void matmul_serial(const Rat* a, const Rat* b, Rat* c, int m, int n, int p);
void matmul_parallel(const Rat* a, const Rat* b, Rat* c, int m, int n, int p);
void matmul(const Rat* a, const Rat* b, Rat* c, int m, int n, int p);

// Clears column `col` in every row except `pivot_row` by subtracting a
// multiple of the pivot row. The pivot entry must already be 1; only columns
// >= col are touched. Rows are independent, hence the parallel variant.
void eliminate_column_serial(Rat* a, int rows, int cols, int pivot_row,
                             int col);
void eliminate_column_parallel(Rat* a, int rows, int cols, int pivot_row,
                               int col);
void eliminate_column(Rat* a, int rows, int cols, int pivot_row, int col);

}  // namespace gamedec::kernels

#endif  // GAMEDEC_KERNELS_HPP_
