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

#include "permcoh/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "permcoh/monotones.hpp"

namespace permcoh {

namespace {

// Coefficients this small would make a support pattern ambiguous at the
// classification threshold; redraw instead.
constexpr double kGenericFloor = 1e-3;
constexpr int kRetryLimit = 64;

// splitmix64 step, used to derive independent substream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex gaussian(std::mt19937_64& rng) {
  // A fresh distribution per call: normal_distribution caches a second
  // variate, and a shared one would leak state across seed streams.
  std::normal_distribution<double> dist(0.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return Complex(re, im) / std::sqrt(2.0);
}

Vector gaussian_vector(std::mt19937_64& rng, int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = gaussian(rng);
  return v;
}

Vector unit_vector(std::mt19937_64& rng, int dim) {
  for (;;) {
    Vector v = gaussian_vector(rng, dim);
    const double nrm = v.norm();
    if (nrm > 1e-12) return v / nrm;
  }
}

/// Unit vector with every component bounded away from zero.
Vector generic_unit_vector(std::mt19937_64& rng, int dim) {
  for (int attempt = 0; attempt < kRetryLimit; ++attempt) {
    Vector v = unit_vector(rng, dim);
    if (v.cwiseAbs().minCoeff() > kGenericFloor) return v;
  }
  throw invariant_error("generators: could not draw a generic unit vector");
}

/// 2 x 2 unitary with every entry bounded away from zero.
Matrix generic_unitary2(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kRetryLimit; ++attempt) {
    Matrix g(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g(i, j) = gaussian(rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
      const Complex d = r(j, j);
      if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    if (q.cwiseAbs().minCoeff() > kGenericFloor) return q;
  }
  throw invariant_error("generators: could not draw a generic 2x2 unitary");
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

}  // namespace

Matrix haar_unitary(int m, std::uint64_t seed) {
  if (m < 1) throw validation_error("haar_unitary: dimension must be positive");
  std::mt19937_64 rng(seed);
  Matrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = gaussian(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Rephasing by R's diagonal phases removes the QR gauge freedom; without
  // it the distribution is not Haar.
  for (int j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  if (!validate_unitary(q, 1e-10))
    throw invariant_error("haar_unitary: QR produced a non-unitary matrix");
  return q;
}

DistinguishabilityMatrix random_gram(int n, std::uint64_t seed, std::optional<int> rank) {
  if (n < 1) throw validation_error("random_gram: size must be positive");
  const int r = rank.value_or(n);
  if (r < 1) throw validation_error("random_gram: rank must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Vector> states;
  states.reserve(n);
  for (int i = 0; i < n; ++i) states.push_back(unit_vector(rng, r));
  return gram_from_states(InternalStateSet(std::move(states)));
}

std::vector<int> achievable_nonzero_counts(int n) {
  if (n < 1) throw validation_error("achievable_nonzero_counts: size must be positive");
  std::vector<int> counts;
  for (const auto& p : partitions(n)) {
    int sq = 0;
    for (int b : p) sq += b * b;
    counts.push_back(sq);
  }
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  return counts;
}

DistinguishabilityMatrix random_gram_with_sparsity(int n, int nnz_target,
                                                   std::uint64_t seed) {
  if (n < 1) throw validation_error("random_gram_with_sparsity: size must be positive");

  std::vector<std::vector<int>> matching;
  for (const auto& p : partitions(n)) {
    int sq = 0;
    for (int b : p) sq += b * b;
    if (sq == nnz_target) matching.push_back(p);
  }
  if (matching.empty()) {
    std::ostringstream msg;
    msg << "random_gram_with_sparsity: " << nnz_target
        << " nonzeros is not achievable for N = " << n << "; achievable counts:";
    for (int c : achievable_nonzero_counts(n)) msg << ' ' << c;
    throw validation_error(msg.str());
  }

  std::mt19937_64 rng(seed);
  const std::vector<int>& blocks = matching[rng() % matching.size()];

  for (int attempt = 0; attempt < kRetryLimit; ++attempt) {
    // States of one block share a coordinate range disjoint from every
    // other block, so cross-block overlaps are exactly zero.
    std::vector<Vector> states;
    states.reserve(n);
    int offset = 0;
    for (int b : blocks) {
      for (int i = 0; i < b; ++i) {
        Vector v = Vector::Zero(n);
        v.segment(offset, b) = unit_vector(rng, b);
        states.push_back(std::move(v));
      }
      offset += b;
    }
    DistinguishabilityMatrix s = gram_from_states(InternalStateSet(std::move(states)));
    // Within-block overlaps must all clear the nonzero threshold.
    if (nonzero_count(s.gram(), kDefaultTol) == nnz_target) return s;
  }
  throw invariant_error("random_gram_with_sparsity: within-block overlaps kept vanishing");
}

Permutation random_permutation(int n, std::uint64_t seed) {
  if (n < 1) throw validation_error("random_permutation: size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  // Fisher-Yates on the raw 64-bit stream keeps the result identical
  // across standard libraries.
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(image[i], image[j]);
  }
  return Permutation(std::move(image));
}

GramAction random_gram_action(int n, std::uint64_t seed) {
  DistinguishabilityMatrix a = random_gram(n, mix_seed(seed, 1));
  return GramAction(a.gram(), random_permutation(n, mix_seed(seed, 2)));
}

PgioChannel random_pgio_channel(int d, int num_kraus, std::uint64_t seed) {
  if (d < 1) throw validation_error("random_pgio_channel: dimension must be positive");
  if (num_kraus < 1)
    throw validation_error("random_pgio_channel: need at least one operator");
  std::mt19937_64 rng(mix_seed(seed, 3));
  // Column i across operators is a unit vector in C^num_kraus; that is
  // exactly the completeness condition.
  std::vector<Vector> coeffs(num_kraus, Vector::Zero(d));
  for (int i = 0; i < d; ++i) {
    const Vector col = unit_vector(rng, num_kraus);
    for (int nop = 0; nop < num_kraus; ++nop) coeffs[nop](i) = col(nop);
  }
  return PgioChannel(random_permutation(d, mix_seed(seed, 4)), std::move(coeffs));
}

KrausSet structured_kraus_set(KrausSuiteCase which, int d, std::uint64_t seed) {
  if (d < 2)
    throw validation_error("structured_kraus_set: cases need dimension >= 2");
  std::mt19937_64 rng(mix_seed(seed, 5));

  // Columns i -> rows target[n][i]; each operator n has single-entry
  // columns, K_n = sum_i c_n^i |target[n][i]><i|.
  auto build = [d](const std::vector<std::vector<int>>& target,
                   const std::vector<Vector>& coeff) {
    std::vector<Matrix> ops;
    for (std::size_t nop = 0; nop < target.size(); ++nop) {
      Matrix k = Matrix::Zero(d, d);
      for (int i = 0; i < d; ++i) k(target[nop][i], i) = coeff[nop](i);
      ops.push_back(std::move(k));
    }
    return KrausSet(std::move(ops));
  };

  std::vector<int> ident(d), shift(d);
  for (int i = 0; i < d; ++i) {
    ident[i] = i;
    shift[i] = (i + 1) % d;
  }

  // Per-column unit vectors over the two operators keep the set complete
  // whenever the two targets never collide on a column pair.
  auto independent_columns = [&rng, d]() {
    std::vector<Vector> coeff(2, Vector::Zero(d));
    for (int i = 0; i < d; ++i) {
      const Vector col = generic_unit_vector(rng, 2);
      coeff[0](i) = col(0);
      coeff[1](i) = col(1);
    }
    return coeff;
  };

  // Columns 0 and tail collide onto a shared row in both operators, so
  // completeness additionally needs those two coefficient columns
  // orthogonal; a 2 x 2 unitary provides them.
  auto fiber_columns = [&rng, d](int first, int second) {
    std::vector<Vector> coeff(2, Vector::Zero(d));
    const Matrix u = generic_unitary2(rng);
    coeff[0](first) = u(0, 0);
    coeff[1](first) = u(1, 0);
    coeff[0](second) = u(0, 1);
    coeff[1](second) = u(1, 1);
    for (int i = 0; i < d; ++i) {
      if (i == first || i == second) continue;
      const Vector col = generic_unit_vector(rng, 2);
      coeff[0](i) = col(0);
      coeff[1](i) = col(1);
    }
    return coeff;
  };

  switch (which) {
    case KrausSuiteCase::Gio:
      return build({ident, ident}, independent_columns());
    case KrausSuiteCase::PgioNotGio:
      return build({shift, shift}, independent_columns());
    case KrausSuiteCase::SioNotFio:
      return build({ident, shift}, independent_columns());
    case KrausSuiteCase::FioNotSio: {
      // One shared map folding the last column onto row 0.
      std::vector<int> fold = ident;
      fold[d - 1] = 0;
      return build({fold, fold}, fiber_columns(0, d - 1));
    }
    case KrausSuiteCase::IoOnly: {
      // Operator 0 folds columns {0,1} onto row 0, operator 1 onto row 1:
      // neither map is injective and the union sends 0 to two targets.
      std::vector<int> fold0 = ident, fold1 = ident;
      fold0[0] = 0;
      fold0[1] = 0;
      fold1[0] = 1;
      fold1[1] = 1;
      return build({fold0, fold1}, fiber_columns(0, 1));
    }
  }
  throw validation_error("structured_kraus_set: unknown case");
}

std::set<OpClass> expected_classes(KrausSuiteCase which) {
  switch (which) {
    case KrausSuiteCase::Gio:
      return {OpClass::IO, OpClass::SIO, OpClass::FIO, OpClass::GIO, OpClass::PGIO};
    case KrausSuiteCase::PgioNotGio:
      return {OpClass::IO, OpClass::SIO, OpClass::FIO, OpClass::PGIO};
    case KrausSuiteCase::SioNotFio:
      return {OpClass::IO, OpClass::SIO};
    case KrausSuiteCase::FioNotSio:
      return {OpClass::IO, OpClass::FIO};
    case KrausSuiteCase::IoOnly:
      return {OpClass::IO};
  }
  throw validation_error("expected_classes: unknown case");
}

}  // namespace permcoh
