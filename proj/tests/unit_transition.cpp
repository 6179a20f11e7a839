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
#include "permcoh/transition.hpp"

using namespace permcoh;

namespace {

Matrix balanced_coupler() {
  Matrix u(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u << Complex(r, 0), Complex(0, r), Complex(0, r), Complex(r, 0);
  return u;
}

/// Four internal states in C^3 whose overlap matrix vanishes exactly at
/// the (0,2), (1,3), (2,3) pairs, leaving ten nonzero entries.
DistinguishabilityMatrix sparse_worked_gram() {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Vector> phi(4, Vector::Zero(3));
  phi[0] << Complex(0), Complex(r, 0), Complex(r, 0);
  phi[1] << Complex(r, 0), Complex(0), Complex(r, 0);
  phi[2] << Complex(1, 0), Complex(0), Complex(0);
  phi[3] << Complex(0), Complex(1, 0), Complex(0);
  return gram_from_states(InternalStateSet(std::move(phi)));
}

}  // namespace

TEST_CASE("two-photon interference across the overlap family") {
  const Matrix u = balanced_coupler();
  for (double x : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    const DistinguishabilityMatrix s = interpolation_family(2, x);
    const double expected = (1.0 - x * x) / 2.0;
    CHECK(probability_bruteforce(u, s).probability ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(probability_inclusion_exclusion(u, s).probability ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(probability_pruned(u, s).probability ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("a complex overlap phase leaves only its modulus observable") {
  const Matrix u = balanced_coupler();
  const Complex s01 = std::polar(0.6, 0.8);
  Matrix g(2, 2);
  g << 1.0, s01, std::conj(s01), 1.0;
  const DistinguishabilityMatrix s(g);
  const double expected = (1.0 - std::norm(s01)) / 2.0;
  CHECK(probability_bruteforce(u, s).probability ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(probability_inclusion_exclusion(u, s).probability ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("all evaluators agree on random instances") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t seed = 40 * n + k;
      const Matrix v = haar_unitary(n, seed);
      const DistinguishabilityMatrix s = random_gram(n, seed + 1000);
      const double pb = probability_bruteforce(v, s).probability;
      const double pi = probability_inclusion_exclusion(v, s).probability;
      const double pp = probability_pruned(v, s).probability;
      CHECK(pi == doctest::Approx(pb).epsilon(1e-10));
      CHECK(pp == doctest::Approx(pb).epsilon(1e-10));
    }
  }
}

TEST_CASE("extreme overlaps reduce to the permanent formulas") {
  for (int n = 2; n <= 6; ++n) {
    const Matrix v = haar_unitary(n, 60 + n);
    const double p_ind = probability_indistinguishable(v).probability;
    const double p_dis = probability_distinguishable(v).probability;
    CHECK(probability_inclusion_exclusion(v, interpolation_family(n, 1.0)).probability ==
          doctest::Approx(p_ind).epsilon(1e-10));
    CHECK(probability_inclusion_exclusion(v, interpolation_family(n, 0.0)).probability ==
          doctest::Approx(p_dis).epsilon(1e-10));
  }
}

TEST_CASE("operation counts follow the closed forms") {
  const int n = 3;
  const Matrix v = haar_unitary(n, 5);
  const DistinguishabilityMatrix dense = random_gram(n, 6);

  const TransitionReport brute = probability_bruteforce(v, dense);
  CHECK(brute.op_count == 6u * (1u << 2) * 9u);  // N! 2^{N-1} N^2

  const TransitionReport ie = probability_inclusion_exclusion(v, dense);
  CHECK(ie.op_count == (1u << 4) * 3u * 9u);  // 2^{2(N-1)} N nnz

  // Executed multiplies: the vv table, one per active pair per column,
  // and the chain product at every lattice point.
  const std::uint64_t nnz = 9, lattice = 1u << (2 * n);
  const std::uint64_t expected_measured =
      nnz * n + nnz * n * (lattice / 4) + lattice * (n - 1);
  CHECK(ie.measured_multiplies == expected_measured);

  const TransitionReport ind = probability_indistinguishable(v);
  CHECK(ind.op_count == (1u << 2) * 9u);
}

TEST_CASE("pruning drops lattice points but not the value") {
  const Matrix v = haar_unitary(4, 7);
  const DistinguishabilityMatrix s = sparse_worked_gram();
  const TransitionReport ie = probability_inclusion_exclusion(v, s);
  const TransitionReport pr = probability_pruned(v, s);
  CHECK(pr.probability == doctest::Approx(ie.probability).epsilon(1e-12));
  CHECK(pr.measured_multiplies < ie.measured_multiplies);
  REQUIRE(pr.pruned.has_value());
  CHECK(pr.pruned->skipped_total > 0);
}

TEST_CASE("worked sparse instance bookkeeping") {
  const DistinguishabilityMatrix s = sparse_worked_gram();
  CHECK(gram_nonzeros(s) == 10);

  const Matrix v = haar_unitary(4, 9);
  const TransitionReport r = probability_pruned(v, s);
  REQUIRE(r.pruned.has_value());
  const PrunedDetail& d = *r.pruned;
  CHECK(d.baseline_bookkeeping == 2048);
  CHECK(d.skipped_bookkeeping == 24);
  CHECK(d.pruned_bookkeeping == 2024);
  CHECK(d.vanishing_pair_count == 10);
  CHECK(d.vanishing_pairs.size() == 10);

  REQUIRE(d.maximal_pairs.size() == 4);
  auto has_pair = [&d](std::vector<int> rows, std::vector<int> cols) {
    for (const VanishingPair& p : d.maximal_pairs)
      if (p.rows == rows && p.cols == cols) return true;
    return false;
  };
  CHECK(has_pair({2}, {0, 3}));
  CHECK(has_pair({3}, {1, 2}));
  CHECK(has_pair({0, 3}, {2}));
  CHECK(has_pair({1, 2}, {3}));
}

TEST_CASE("thread partitioning does not change the result") {
  const Matrix v = haar_unitary(8, 12);
  const DistinguishabilityMatrix s = random_gram(8, 13);
  const TransitionReport one = probability_inclusion_exclusion(v, s, 1);
  const TransitionReport four = probability_inclusion_exclusion(v, s, 4);
  CHECK(four.probability == doctest::Approx(one.probability).epsilon(1e-12));
  CHECK(four.measured_multiplies == one.measured_multiplies);
}

TEST_CASE("grouped decomposition sums to the probability") {
  for (int n = 2; n <= 5; ++n) {
    const Matrix v = haar_unitary(n, 70 + n);
    const DistinguishabilityMatrix s = random_gram(n, 80 + n);
    const double p = probability_bruteforce(v, s).probability;

    const auto terms = z_decomposition(v, s);
    REQUIRE(terms.count(0) == 1);
    CHECK(terms.count(1) == 0);
    Complex total = 0.0;
    for (const auto& [a, z] : terms) total += z;
    CHECK(total.real() == doctest::Approx(p).epsilon(1e-10));
    CHECK(std::abs(total.imag()) < 1e-10);

    // Unsigned mode dominates termwise.
    const auto abs_terms = z_decomposition(v, s, false);
    for (const auto& [a, z] : terms) {
      CHECK(abs_terms.at(a).imag() == 0.0);
      CHECK(abs_terms.at(a).real() >= std::abs(z) - 1e-12);
    }
  }
}

TEST_CASE("truncation endpoints") {
  const int n = 4;
  const Matrix v = haar_unitary(n, 91);
  const DistinguishabilityMatrix s = random_gram(n, 92);
  const double p = probability_bruteforce(v, s).probability;

  // k = N keeps everything.
  const TransitionReport full = probability_truncated(v, s, n);
  CHECK(full.probability == doctest::Approx(p).epsilon(1e-12));
  CHECK(full.residual_abs_sum == 0.0);
  CHECK(full.truncation_k == n);

  // k = 0 keeps only the fixed-point class, which is the fully
  // distinguishable value.
  const TransitionReport zero = probability_truncated(v, s, 0);
  CHECK(zero.probability ==
        doctest::Approx(probability_distinguishable(v).probability).epsilon(1e-12));
  CHECK(zero.x_estimate == 0.0);
  CHECK(zero.residual_abs_sum > 0.0);

  // The dropped-term magnitude bounds the truncation error.
  for (int k : {0, 2, 3}) {
    const TransitionReport t = probability_truncated(v, s, k);
    CHECK(std::abs(t.probability - p) <= t.residual_abs_sum + 1e-12);
  }

  CHECK_THROWS_AS(probability_truncated(v, s, 1), validation_error);
  CHECK_THROWS_AS(probability_truncated(v, s, 5), validation_error);
}

TEST_CASE("scale estimate uses the class maximum") {
  const DistinguishabilityMatrix s = interpolation_family(5, 0.3);
  const Matrix v = haar_unitary(5, 95);
  const TransitionReport t = probability_truncated(v, s, 3);
  CHECK(t.x_estimate == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("bound chain holds and is ordered") {
  for (int k = 0; k < 12; ++k) {
    const int n = 2 + k % 4;
    const Matrix v = haar_unitary(n, 500 + k);
    const DistinguishabilityMatrix s = random_gram(n, 600 + k);
    const BoundsRecord b = bounds(v, s);
    REQUIRE(b.tighter_valid);
    CHECK(b.probability <= b.tighter + 1e-12 * std::max(1.0, b.tighter));
    CHECK(b.tighter <= b.perm_bound + 1e-12 * std::max(1.0, b.perm_bound));
    CHECK(b.perm_bound <= b.gurvits_bound + 1e-12 * std::max(1.0, b.gurvits_bound));
  }
}

TEST_CASE("input validation") {
  const DistinguishabilityMatrix s = interpolation_family(3, 0.5);
  Matrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(probability_bruteforce(rect, s), validation_error);
  CHECK_THROWS_AS(probability_inclusion_exclusion(haar_unitary(4, 1), s),
                  validation_error);
  CHECK_THROWS_AS(probability_bruteforce(haar_unitary(11, 1), interpolation_family(11, 0.5)),
                  capacity_error);
}

TEST_CASE("algorithm names are distinct") {
  CHECK(std::string(algorithm_name(Algorithm::BruteForce)) == "BruteForce");
  CHECK(std::string(algorithm_name(Algorithm::InclusionExclusion)) !=
        std::string(algorithm_name(Algorithm::PrunedInclusionExclusion)));
}
