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

#include <vector>

#include "permcoh/core.hpp"

using namespace permcoh;

TEST_CASE("permutation validates its image") {
  CHECK_NOTHROW(Permutation({2, 0, 1}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), validation_error);
  CHECK_THROWS_AS(Permutation({1, 2, 3}), validation_error);
  CHECK_THROWS_AS(Permutation({}), validation_error);
}

TEST_CASE("permutation basics") {
  const Permutation p({2, 0, 1});
  CHECK(p.size() == 3);
  CHECK(p[0] == 2);
  CHECK(p.fixed_points() == 0);
  CHECK_FALSE(p.is_identity());
  CHECK(p.inverse() == Permutation({1, 2, 0}));
  CHECK(Permutation::identity(3).is_identity());
  CHECK(Permutation({0, 2, 1}).fixed_points() == 1);
}

TEST_CASE("occupation vector") {
  const OccupationVector collision_free({1, 0, 1, 1});
  CHECK(collision_free.modes() == 4);
  CHECK(collision_free.total() == 3);
  CHECK(collision_free.collision_free());
  CHECK_FALSE(OccupationVector({2, 0}).collision_free());
  CHECK_THROWS_AS(OccupationVector({1, -1}), validation_error);
  CHECK_THROWS_AS(OccupationVector({0, 0}), validation_error);
}

TEST_CASE("unitarity check") {
  Matrix bs(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  bs << Complex(r, 0), Complex(0, r), Complex(0, r), Complex(r, 0);
  CHECK(validate_unitary(bs, 1e-12));

  Matrix shear(2, 2);
  shear << 1.0, 1.0, 0.0, 1.0;
  CHECK_FALSE(validate_unitary(shear, 1e-6));

  Matrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(validate_unitary(rect), validation_error);
}

TEST_CASE("finite check") {
  Matrix m(1, 2);
  m << 1.0, 2.0;
  CHECK_NOTHROW(ensure_finite(m));
  m(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
  CHECK_THROWS_AS(ensure_finite(m), validation_error);
}

TEST_CASE("transition submatrix repeats rows and columns in mode order") {
  Matrix u(3, 3);
  u << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0;

  const Matrix v = submatrix_for_transition(u, OccupationVector({1, 1, 0}),
                                            OccupationVector({0, 1, 1}));
  REQUIRE(v.rows() == 2);
  CHECK(v(0, 0) == Complex(2.0));
  CHECK(v(0, 1) == Complex(3.0));
  CHECK(v(1, 0) == Complex(5.0));
  CHECK(v(1, 1) == Complex(6.0));

  // A doubly occupied output mode duplicates its column.
  const Matrix w = submatrix_for_transition(u, OccupationVector({1, 1, 0}),
                                            OccupationVector({0, 2, 0}));
  CHECK(w(0, 0) == w(0, 1));
  CHECK(w(0, 0) == Complex(2.0));

  CHECK_THROWS_AS(submatrix_for_transition(u, OccupationVector({1, 1, 0}),
                                           OccupationVector({1, 1, 1})),
                  validation_error);
}

TEST_CASE("permutation enumeration is lexicographic and complete") {
  std::vector<std::vector<int>> seen;
  enumerate_permutations(3, [&](const Permutation& p) { seen.push_back(p.image()); });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{0, 1, 2});
  CHECK(seen[1] == std::vector<int>{0, 2, 1});
  CHECK(seen.back() == std::vector<int>{2, 1, 0});

  CHECK_THROWS_AS(enumerate_permutations(11, [](const Permutation&) {}), capacity_error);
}
