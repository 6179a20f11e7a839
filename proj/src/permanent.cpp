/*
 * Copyright 2026 The permcoh developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "permcoh/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>
#include <vector>

#include "permcoh/core.hpp"

namespace permcoh {

namespace {

void require_square(const Matrix& mat, const char* who) {
  if (mat.rows() != mat.cols())
    throw validation_error(std::string(who) + ": matrix is not square");
  ensure_finite(mat);
}

// Sum over subsets [first, last) of the Ryser expansion.  rowsums enter
// initialized for the subset gray(first - 1) and leave dirty.
Complex ryser_range(const Matrix& a, std::uint64_t first, std::uint64_t last,
                    std::vector<Complex>& rowsums, std::uint64_t& multiplies) {
  const int n = static_cast<int>(a.rows());
  Complex total = 0.0;
  for (std::uint64_t k = first; k < last; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t prev = (k - 1) ^ ((k - 1) >> 1);
    const std::uint64_t diff = gray ^ prev;
    const int j = std::countr_zero(diff);
    if (gray & diff)
      for (int i = 0; i < n; ++i) rowsums[i] += a(i, j);
    else
      for (int i = 0; i < n; ++i) rowsums[i] -= a(i, j);

    Complex prod = rowsums[0];
    for (int i = 1; i < n; ++i) prod *= rowsums[i];
    multiplies += static_cast<std::uint64_t>(n - 1);

    const int missing = n - std::popcount(gray);
    total += (missing & 1) ? -prod : prod;
  }
  return total;
}

void init_rowsums(const Matrix& a, std::uint64_t subset, std::vector<Complex>& rowsums) {
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < n; ++j)
      if (subset >> j & 1) s += a(i, j);
    rowsums[i] = s;
  }
}

}  // namespace

Complex permanent_naive(const Matrix& mat) {
  require_square(mat, "permanent_naive");
  const int n = static_cast<int>(mat.rows());
  if (n == 0) return 1.0;
  Complex total = 0.0;
  enumerate_permutations(n, [&](const Permutation& sigma) {
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= mat(i, sigma[i]);
    total += prod;
  });
  return total;
}

Complex permanent_ryser(const Matrix& mat, int threads, std::uint64_t* multiplies) {
  require_square(mat, "permanent_ryser");
  const int n = static_cast<int>(mat.rows());
  if (n > 30) throw capacity_error("permanent_ryser: N > 30 exceeds the subset index width");
  if (n == 0) return 1.0;
  if (threads == 0) threads = thread_budget();

  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t mults = 0;

  // Small problems, or a budget of one: plain sequential sweep.
  if (threads <= 1 || n < 16) {
    std::vector<Complex> rowsums(n, Complex{0.0});
    const Complex total = ryser_range(mat, 1, count, rowsums, mults);
    if (multiplies) *multiplies = mults;
    const Complex sign = (n & 1) ? Complex{-1.0} : Complex{1.0};
    return sign * total;
  }

  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), count - 1));
  std::vector<Complex> partial(workers, Complex{0.0});
  std::vector<std::uint64_t> partial_mults(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (count - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t first = 1 + chunk * w;
    const std::uint64_t last = (w == workers - 1) ? count : first + chunk;
    pool.emplace_back([&, w, first, last] {
      std::vector<Complex> rowsums(n);
      init_rowsums(mat, (first - 1) ^ ((first - 1) >> 1), rowsums);
      partial[w] = ryser_range(mat, first, last, rowsums, partial_mults[w]);
    });
  }
  for (auto& t : pool) t.join();

  Complex total = 0.0;
  for (int w = 0; w < workers; ++w) {
    total += partial[w];
    mults += partial_mults[w];
  }
  if (multiplies) *multiplies = mults;
  const Complex sign = (n & 1) ? Complex{-1.0} : Complex{1.0};
  return sign * total;
}

double permanent_abs(const Matrix& mat) {
  require_square(mat, "permanent_abs");
  Matrix absmat = mat.cwiseAbs().cast<Complex>();
  return permanent_ryser(absmat).real();
}

double gurvits_capacity(const Matrix& dsm) {
  require_square(dsm, "gurvits_capacity");
  const int n = static_cast<int>(dsm.rows());
  const double entry_tol = kDefaultTol;

  double log_f = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex z = dsm(i, j);
      if (std::abs(z.imag()) > entry_tol)
        throw validation_error("gurvits_capacity: entries must be real");
      double p = z.real();
      if (p < -entry_tol || p > 1.0 + entry_tol)
        throw validation_error("gurvits_capacity: entry outside [0, 1]");
      p = std::clamp(p, 0.0, 1.0);
      const double q = 1.0 - p;
      if (q > 0.0) log_f += q * std::log(q);  // q == 0 contributes log(0^0) = 0
    }

  // The sandwich needs a doubly stochastic matrix; a loose tolerance
  // admits accumulated rounding from |V_ij|^2 of a numerical unitary.
  const double sum_tol = 1e-6;
  for (int i = 0; i < n; ++i) {
    if (std::abs(dsm.row(i).real().sum() - 1.0) > sum_tol)
      throw validation_error("gurvits_capacity: row sums are not 1 (not doubly stochastic)");
    if (std::abs(dsm.col(i).real().sum() - 1.0) > sum_tol)
      throw validation_error("gurvits_capacity: column sums are not 1 (not doubly stochastic)");
  }
  return std::exp(log_f);
}

}  // namespace permcoh
