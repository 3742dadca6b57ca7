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

// Times the serial kernels against the OpenMP ones on rational matrix
// multiplication and on full RREF runs, and checks that both produce
// identical results. Usage: bench_kernels [max_size]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "gamedec/kernels.hpp"
#include "gamedec/linalg.hpp"
#include "gamedec/matrix.hpp"
#include "gamedec/random_game.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using gamedec::RatMatrix;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_matmul(int size, gamedec::Rng* rng) {
  const RatMatrix a = gamedec::random_matrix(size, size, rng, 9, 4);
  const RatMatrix b = gamedec::random_matrix(size, size, rng, 9, 4);
  RatMatrix serial(size, size);
  RatMatrix parallel(size, size);

  auto start = Clock::now();
  gamedec::kernels::matmul_serial(a.data(), b.data(), serial.data(), size,
                                  size, size);
  const double t_serial = seconds_since(start);

  start = Clock::now();
  gamedec::kernels::matmul_parallel(a.data(), b.data(), parallel.data(), size,
                                    size, size);
  const double t_parallel = seconds_since(start);

  if (!(serial == parallel)) {
    std::cerr << "matmul mismatch at size " << size << "\n";
    std::exit(1);
  }
  std::cout << "matmul " << size << "x" << size << ": serial " << t_serial
            << "s, parallel " << t_parallel << "s, speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
}

void bench_rref(int size, gamedec::Rng* rng) {
  const RatMatrix m = gamedec::random_matrix(size, size, rng, 9, 4);

  gamedec::kernels::set_mode(gamedec::kernels::Mode::kSerial);
  auto start = Clock::now();
  const gamedec::RrefResult serial = gamedec::rref(m);
  const double t_serial = seconds_since(start);

  gamedec::kernels::set_mode(gamedec::kernels::Mode::kParallel);
  start = Clock::now();
  const gamedec::RrefResult parallel = gamedec::rref(m);
  const double t_parallel = seconds_since(start);

  gamedec::kernels::set_mode(gamedec::kernels::Mode::kAuto);
  if (!(serial.m == parallel.m) || serial.rank != parallel.rank) {
    std::cerr << "rref mismatch at size " << size << "\n";
    std::exit(1);
  }
  std::cout << "rref   " << size << "x" << size << ": serial " << t_serial
            << "s, parallel " << t_parallel << "s, speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int max_size = argc > 1 ? std::atoi(argv[1]) : 192;
  std::cout << "threads available: " << gamedec::kernels::max_threads()
            << "\n";
  gamedec::Rng rng(20260815);
  for (int size = 48; size <= max_size; size *= 2) {
    bench_matmul(size, &rng);
  }
  for (int size = 48; size <= max_size; size *= 2) {
    bench_rref(size, &rng);
  }
  return 0;
}
