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

#include "gamedec/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gamedec::kernels {

namespace {

std::atomic<Mode> g_mode{Mode::kAuto};

// GMP rationals cost ~100ns per op, so the parallel cutover sits far lower
// than it would for doubles.
constexpr long kMatmulParallelWork = 20000;
constexpr long kEliminateParallelWork = 20000;

bool threads_available() { return max_threads() > 1; }

inline void row_axpy(Rat* row, const Rat* pivot_row, const Rat& factor,
                     int from, int to) {
  for (int c = from; c < to; ++c) {
    row[c] -= factor * pivot_row[c];
  }
}

}  // namespace

void set_mode(Mode mode) { g_mode.store(mode); }

Mode mode() { return g_mode.load(); }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void matmul_serial(const Rat* a, const Rat* b, Rat* c, int m, int n, int p) {
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      Rat acc = 0;
      for (int l = 0; l < n; ++l) {
        acc += a[i * n + l] * b[l * p + j];
      }
      c[i * p + j] = acc;
    }
  }
}

void matmul_parallel(const Rat* a, const Rat* b, Rat* c, int m, int n, int p) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) {
      Rat acc = 0;
      for (int l = 0; l < n; ++l) {
        acc += a[i * n + l] * b[l * p + j];
      }
      c[i * p + j] = acc;
    }
  }
}

void matmul(const Rat* a, const Rat* b, Rat* c, int m, int n, int p) {
  Mode current = mode();
  bool parallel = current == Mode::kParallel;
  if (current == Mode::kAuto) {
    parallel = threads_available() &&
               static_cast<long>(m) * n * p >= kMatmulParallelWork;
  }
  if (parallel) {
    matmul_parallel(a, b, c, m, n, p);
  } else {
    matmul_serial(a, b, c, m, n, p);
  }
}

void eliminate_column_serial(Rat* a, int rows, int cols, int pivot_row,
                             int col) {
  const Rat* pivot = a + static_cast<long>(pivot_row) * cols;
  for (int r = 0; r < rows; ++r) {
    if (r == pivot_row) continue;
    Rat* row = a + static_cast<long>(r) * cols;
    if (row[col] == 0) continue;
    Rat factor = row[col];
    row_axpy(row, pivot, factor, col + 1, cols);
    row[col] = 0;
  }
}

void eliminate_column_parallel(Rat* a, int rows, int cols, int pivot_row,
                               int col) {
  const Rat* pivot = a + static_cast<long>(pivot_row) * cols;
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    if (r == pivot_row) continue;
    Rat* row = a + static_cast<long>(r) * cols;
    if (row[col] == 0) continue;
    Rat factor = row[col];
    row_axpy(row, pivot, factor, col + 1, cols);
    row[col] = 0;
  }
}

void eliminate_column(Rat* a, int rows, int cols, int pivot_row, int col) {
  Mode current = mode();
  bool parallel = current == Mode::kParallel;
  if (current == Mode::kAuto) {
    parallel = threads_available() &&
               static_cast<long>(rows) * (cols - col) >= kEliminateParallelWork;
  }
  if (parallel) {
    eliminate_column_parallel(a, rows, cols, pivot_row, col);
  } else {
    eliminate_column_serial(a, rows, cols, pivot_row, col);
  }
}

}  // namespace gamedec::kernels
