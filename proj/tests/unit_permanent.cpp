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

#include <doctest.h>

#include <cmath>
#include <random>

#include "permcoh/generators.hpp"
#include "permcoh/permanent.hpp"

using namespace permcoh;

namespace {

Matrix random_complex(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

}  // namespace

TEST_CASE("hand-checked permanents") {
  Matrix a(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  CHECK(std::abs(permanent_ryser(a) - Complex(10.0)) < 1e-14);
  CHECK(std::abs(permanent_naive(a) - Complex(10.0)) < 1e-14);

  Matrix ones = Matrix::Constant(3, 3, Complex(1.0));
  CHECK(std::abs(permanent_ryser(ones) - Complex(6.0)) < 1e-13);

  Matrix band(3, 3);
  band << 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0;
  CHECK(std::abs(permanent_ryser(band) - Complex(3.0)) < 1e-13);

  // Collision amplitude of the balanced coupler: i*i + 1*1 = 0.
  Matrix hom(2, 2);
  hom << Complex(0, 1), Complex(1, 0), Complex(1, 0), Complex(0, 1);
  CHECK(std::abs(permanent_ryser(hom)) < 1e-15);

  CHECK(std::abs(permanent_ryser(Matrix::Identity(6, 6)) - Complex(1.0)) < 1e-13);
}

TEST_CASE("gray-code and naive evaluation agree") {
  for (int n = 1; n <= 7; ++n) {
    const Matrix m = random_complex(n, 100 + n);
    const Complex a = permanent_naive(m);
    const Complex b = permanent_ryser(m);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("multiply count matches the closed form") {
  for (int n : {1, 2, 4, 6, 9}) {
    const Matrix m = random_complex(n, 200 + n);
    std::uint64_t mults = 0;
    permanent_ryser(m, 1, &mults);
    const std::uint64_t expected =
        ((std::uint64_t{1} << n) - 1) * static_cast<std::uint64_t>(n - 1);
    CHECK(mults == expected);
  }
}

TEST_CASE("threaded evaluation reproduces the sequential value") {
  // Below the size threshold the thread count is ignored entirely.
  const Matrix small = random_complex(8, 17);
  CHECK(permanent_ryser(small, 4) == permanent_ryser(small, 1));

  const Matrix big = random_complex(17, 18);
  std::uint64_t m1 = 0, m4 = 0;
  const Complex seq = permanent_ryser(big, 1, &m1);
  const Complex par = permanent_ryser(big, 4, &m4);
  CHECK(std::abs(seq - par) <= 1e-12 * std::abs(seq));
  CHECK(m1 == m4);
}

TEST_CASE("size cutoffs") {
  CHECK_THROWS_AS(permanent_naive(Matrix::Identity(11, 11)), capacity_error);
  CHECK_THROWS_AS(permanent_ryser(Matrix::Identity(31, 31)), capacity_error);
}

TEST_CASE("entrywise absolute permanent") {
  Matrix m(2, 2);
  m << Complex(0, 1), Complex(-1, 0), Complex(3, 4), Complex(0, -2);
  // |entries| = [[1, 1], [5, 2]]; permanent 1*2 + 1*5 = 7.
  CHECK(permanent_abs(m) == doctest::Approx(7.0).epsilon(1e-13));
}

TEST_CASE("capacity function on hand-checked inputs") {
  // Uniform 2x2: each entry contributes (1/2)^(1/2), so F = 1/4.
  Matrix uniform = Matrix::Constant(2, 2, Complex(0.5));
  CHECK(gurvits_capacity(uniform) == doctest::Approx(0.25).epsilon(1e-13));

  // Permutation matrix: entries 0 and 1 give factors 1^1 and 0^0, both 1.
  CHECK(gurvits_capacity(Matrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("capacity rejects invalid inputs") {
  Matrix negative(2, 2);
  negative << 1.5, -0.5, -0.5, 1.5;
  CHECK_THROWS_AS(gurvits_capacity(negative), validation_error);

  Matrix not_stochastic = Matrix::Constant(2, 2, Complex(0.3));
  CHECK_THROWS_AS(gurvits_capacity(not_stochastic), validation_error);

  Matrix complex_entry(1, 1);
  complex_entry << Complex(0.5, 0.5);
  CHECK_THROWS_AS(gurvits_capacity(complex_entry), validation_error);
}

TEST_CASE("capacity brackets the permanent of unitary intensity matrices") {
  for (int n = 2; n <= 8; ++n) {
    const Matrix u = haar_unitary(n, 300 + n);
    const Matrix w = u.cwiseProduct(u.conjugate());
    const double f = gurvits_capacity(w);
    const double p = permanent_ryser(w).real();
    CHECK(p >= f - 1e-12);
    CHECK(p <= std::ldexp(f, n) * (1.0 + 1e-12));
  }
}
