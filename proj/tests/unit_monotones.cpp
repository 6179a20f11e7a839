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
#include <vector>

#include "permcoh/distinguishability.hpp"
#include "permcoh/generators.hpp"
#include "permcoh/monotones.hpp"
#include "permcoh/pgio.hpp"

using namespace permcoh;

TEST_CASE("support counters") {
  Matrix m(3, 3);
  m << 1.0, 0.0, Complex(0, 0.3), 0.0, 1.0, 0.0, Complex(0, -0.3), 0.0, 1.0;
  CHECK(nonzero_count(m) == 5);
  CHECK(offdiagonal_count(m) == 2);

  // The threshold is relative to the largest modulus.
  Matrix scaled = m * 1e-8;
  CHECK(nonzero_count(scaled) == 5);

  CHECK(nonzero_count(Matrix::Zero(2, 2)) == 0);
  CHECK(offdiagonal_count(Matrix::Identity(4, 4)) == 0);
}

TEST_CASE("permutation overlap product") {
  const DistinguishabilityMatrix s = interpolation_family(4, 0.5);
  CHECK(j_sigma(s.gram(), Permutation::identity(4)) == doctest::Approx(1.0));
  CHECK(j_sigma(s.gram(), Permutation({1, 0, 2, 3})) == doctest::Approx(0.25));
  CHECK(j_sigma(s.gram(), Permutation({1, 2, 3, 0})) ==
        doctest::Approx(std::pow(0.5, 4)));
}

TEST_CASE("class maxima on the uniform family") {
  const double x = 0.6;
  for (int n = 4; n <= 6; ++n) {
    const DistinguishabilityMatrix s = interpolation_family(n, x);
    for (int a = 2; a <= n; ++a) {
      const JaResult r = j_a(s, a);
      CHECK(r.value == doctest::Approx(std::pow(x, a)).epsilon(1e-12));
      CHECK(r.sigma.size() - r.sigma.fixed_points() == a);
    }
  }
}

TEST_CASE("tie-break picks the lexicographically smallest witness") {
  // Every permutation moving exactly a indices attains x^a here, so the
  // reported witness is pinned by the tie-break alone.
  const DistinguishabilityMatrix s = interpolation_family(4, 0.5);
  CHECK(j_a(s, 2).sigma == Permutation({0, 1, 3, 2}));
  CHECK(j_a(s, 3).sigma == Permutation({0, 2, 3, 1}));
  CHECK(j_a(s, 4).sigma == Permutation({1, 0, 3, 2}));
}

TEST_CASE("a = 0 is the identity class") {
  const DistinguishabilityMatrix s = random_gram(5, 11);
  const JaResult r = j_a(s, 0);
  CHECK(r.sigma.is_identity());
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("invalid class indices are rejected") {
  const DistinguishabilityMatrix s = interpolation_family(4, 0.5);
  CHECK_THROWS_AS(j_a(s, 1), validation_error);
  CHECK_THROWS_AS(j_a(s, 5), validation_error);
  CHECK_THROWS_AS(j_a(s, -1), validation_error);
  CHECK_THROWS_AS(j_a(interpolation_family(13, 0.5), 2), capacity_error);
}

TEST_CASE("report covers every metric and flags non-increase") {
  const DistinguishabilityMatrix before = random_gram(4, 21);

  SUBCASE("identity action leaves everything equal") {
    const MonotoneReport rep = monotone_report(before, before);
    CHECK_FALSE(rep.any_increase());
    for (const MonotoneEntry& e : rep.entries) {
      CHECK(e.before == doctest::Approx(e.after).epsilon(1e-13));
      CHECK(e.decreased);
    }
  }

  SUBCASE("dephasing kills the off-diagonal metrics") {
    const DistinguishabilityMatrix after = interpolation_family(4, 0.0);
    const MonotoneReport rep = monotone_report(before, after);
    CHECK_FALSE(rep.any_increase());
    bool saw_offdiag = false;
    for (const MonotoneEntry& e : rep.entries) {
      if (e.name == "offdiagonal_count") {
        saw_offdiag = true;
        CHECK(e.after == 0.0);
      }
      if (e.name.rfind("j_", 0) == 0 && e.name != "j_0") CHECK(e.after <= 1e-12);
    }
    CHECK(saw_offdiag);
  }

  SUBCASE("metric names are stable") {
    const MonotoneReport rep = monotone_report(before, before);
    std::vector<std::string> names;
    for (const auto& e : rep.entries) names.push_back(e.name);
    CHECK(names == std::vector<std::string>{"nonzero_count", "offdiagonal_count",
                                            "permanent_abs", "j_0", "j_2", "j_3",
                                            "j_4"});
  }
}

TEST_CASE("random incoherent actions never raise a metric") {
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 5;
    const DistinguishabilityMatrix before = random_gram(n, 3000 + k);
    const GramAction act = random_gram_action(n, 3100 + k);
    const Matrix after_rho = apply_gram_action(normalize(before).rho(), act);
    const DistinguishabilityMatrix after =
        NormalizedDistinguishability(after_rho).source_gram();
    const MonotoneReport rep = monotone_report(before, after);
    CHECK_FALSE(rep.any_increase());
  }
}
