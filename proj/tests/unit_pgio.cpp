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
#include <set>
#include <vector>

#include "permcoh/distinguishability.hpp"
#include "permcoh/generators.hpp"
#include "permcoh/pgio.hpp"

using namespace permcoh;

namespace {

Matrix kraus_apply(const KrausSet& ks, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& k : ks.operators) out += k * rho * k.adjoint();
  return out;
}

}  // namespace

TEST_CASE("kraus completeness is enforced") {
  Matrix half = Matrix::Identity(2, 2) * std::sqrt(0.5);
  CHECK_NOTHROW(KrausSet({half, half}));
  CHECK_THROWS_AS(KrausSet({half}), validation_error);
  CHECK_THROWS_AS(KrausSet(std::vector<Matrix>{}), validation_error);
}

TEST_CASE("canonical channel validates column norms") {
  Vector c1(2), c2(2);
  c1 << std::sqrt(0.4), std::sqrt(0.7);
  c2 << std::sqrt(0.6), std::sqrt(0.3);
  CHECK_NOTHROW(PgioChannel(Permutation::identity(2), {c1, c2}));

  Vector bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(PgioChannel(Permutation::identity(2), {bad, c2}), validation_error);
}

TEST_CASE("classification of handcrafted sets") {
  const double r = std::sqrt(0.5);

  // Two diagonal operators: everything.
  Matrix d1 = Matrix::Zero(2, 2), d2 = Matrix::Zero(2, 2);
  d1(0, 0) = r;
  d1(1, 1) = Complex(0, r);
  d2(0, 0) = r;
  d2(1, 1) = Complex(0, -r);
  CHECK(classify(KrausSet({d1, d2})) ==
        std::set<OpClass>{OpClass::IO, OpClass::SIO, OpClass::FIO, OpClass::GIO,
                          OpClass::PGIO});

  // The same columns routed through the swap: no longer genuinely diagonal.
  Matrix p1 = Matrix::Zero(2, 2), p2 = Matrix::Zero(2, 2);
  p1(1, 0) = r;
  p1(0, 1) = r;
  p2(1, 0) = r;
  p2(0, 1) = -r;
  CHECK(classify(KrausSet({p1, p2})) ==
        std::set<OpClass>{OpClass::IO, OpClass::SIO, OpClass::FIO, OpClass::PGIO});

  // Identity routing in one operator, swap routing in the other: the
  // union map is multi-valued, so the set leaves the fixed class.
  Matrix m1 = Matrix::Identity(2, 2) * r;
  CHECK(classify(KrausSet({m1, p1})) == std::set<OpClass>{OpClass::IO, OpClass::SIO});

  // A dense unitary is complete but not incoherent at all.
  Matrix had(2, 2);
  had << r, r, r, -r;
  CHECK(classify(KrausSet({had})).empty());
}

TEST_CASE("column-collapse sets keep FIO but lose SIO") {
  // Both operators fold column 1 onto the row of column 0; orthogonal
  // coefficient pairs keep the set complete.
  Matrix k1 = Matrix::Zero(2, 2), k2 = Matrix::Zero(2, 2);
  const double r = std::sqrt(0.5);
  k1(0, 0) = r;
  k1(0, 1) = r;
  k2(0, 0) = r;
  k2(0, 1) = -r;
  const auto classes = classify(KrausSet({k1, k2}));
  CHECK(classes.count(OpClass::IO) == 1);
  CHECK(classes.count(OpClass::FIO) == 1);
  CHECK(classes.count(OpClass::SIO) == 0);
  CHECK(classes.count(OpClass::PGIO) == 0);
}

TEST_CASE("gram action application") {
  Matrix rho(2, 2);
  rho << 0.5, Complex(0.2, 0.1), Complex(0.2, -0.1), 0.5;
  Matrix a(2, 2);
  a << 1.0, 0.5, 0.5, 1.0;
  const GramAction act(a, Permutation({1, 0}));
  const Matrix out = apply_gram_action(rho, act);
  // Entry (0,0) reads from (sigma(0), sigma(0)) = (1,1).
  CHECK(std::abs(out(0, 0) - Complex(0.5)) < 1e-14);
  CHECK(std::abs(out(0, 1) - Complex(0.1, -0.05)) < 1e-14);
  CHECK(std::abs(out(1, 0) - Complex(0.1, 0.05)) < 1e-14);
}

TEST_CASE("gram action data is validated") {
  Matrix bad(2, 2);
  bad << 1.0, 1.5, 1.5, 1.0;
  CHECK_THROWS_AS(GramAction(bad, Permutation::identity(2)), validation_error);
}

TEST_CASE("canonical channel and its gram action agree on states") {
  // The permutation in the reduced action is the inverse of the channel
  // permutation; applying both representations to random states pins the
  // direction down.
  for (int k = 0; k < 10; ++k) {
    const int d = 2 + k % 3;
    const PgioChannel ch = random_pgio_channel(d, 3, 600 + k);
    const KrausSet ks = ch.to_kraus();
    const Matrix rho = normalize(random_gram(d, 700 + k)).rho();
    const Matrix direct = kraus_apply(ks, rho);
    const Matrix reduced = apply_gram_action(rho, kraus_to_gram_action(ch));
    CHECK((direct - reduced).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("a three-cycle channel lands entries where the kraus form does") {
  // d = 3, sigma = (0 -> 1 -> 2 -> 0), single unit coefficient set: the
  // action must read entry (i, j) from (sigma^-1 i, sigma^-1 j).
  Vector c(3);
  c << 1.0, 1.0, 1.0;
  const PgioChannel ch(Permutation({1, 2, 0}), {c});
  Matrix rho(3, 3);
  rho << 0.5, Complex(0.1, 0.02), Complex(0.05, -0.01),
      Complex(0.1, -0.02), 0.3, Complex(0.07, 0.03),
      Complex(0.05, 0.01), Complex(0.07, -0.03), 0.2;
  const Matrix direct = kraus_apply(ch.to_kraus(), rho);
  const Matrix reduced = apply_gram_action(rho, kraus_to_gram_action(ch));
  CHECK((direct - reduced).cwiseAbs().maxCoeff() < 1e-14);
  // Population of input level 0 moves to level sigma(0) = 1.
  CHECK(std::abs(direct(1, 1) - Complex(0.5)) < 1e-14);
}

TEST_CASE("target construction reproduces arbitrary states exactly") {
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    const NormalizedDistinguishability target = normalize(random_gram(n, 800 + k));
    const GramAction act = channel_to_target(target);
    CHECK(act.sigma.is_identity());
    const Matrix start = maximally_coherent(n, std::vector<double>(n, 0.0)).rho();
    const Matrix produced = apply_gram_action(start, act);
    CHECK((produced - target.rho()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("overlap product extension") {
  Matrix s1(2, 2), s2(2, 2);
  s1 << 1.0, 0.8, 0.8, 1.0;
  s2 << 1.0, Complex(0, 0.5), Complex(0, -0.5), 1.0;
  const DistinguishabilityMatrix ext =
      hadamard_extend(DistinguishabilityMatrix(s1), DistinguishabilityMatrix(s2));
  CHECK(std::abs(ext(0, 1) - Complex(0, 0.4)) < 1e-14);
  CHECK(ext(0, 0) == Complex(1.0));

  // Extending by the identity overlap erases all off-diagonals.
  const DistinguishabilityMatrix wiped =
      hadamard_extend(DistinguishabilityMatrix(s1), interpolation_family(2, 0.0));
  CHECK(std::abs(wiped(0, 1)) < 1e-15);
}
