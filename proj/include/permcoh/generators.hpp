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

#ifndef PERMCOH_GENERATORS_HPP
#define PERMCOH_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "permcoh/common.hpp"
#include "permcoh/core.hpp"
#include "permcoh/distinguishability.hpp"
#include "permcoh/pgio.hpp"

namespace permcoh {

/// PRNG identifier recorded in emitted metadata: every generator here is
/// driven by a seeded mt19937_64 stream.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

/*
 * Haar-distributed M x M unitary: complex Ginibre matrix, QR, then the
 * Q-columns rephased by the unit phases of R's diagonal so the
 * distribution is exactly Haar.  Deterministic per seed.
 */
Matrix haar_unitary(int m, std::uint64_t seed);

/// Overlap matrix of N random unit states in dimension rank (default N).
/// rank = 1 forces |S_ij| = 1 everywhere.
DistinguishabilityMatrix random_gram(int n, std::uint64_t seed,
                                     std::optional<int> rank = std::nullopt);

/*
 * An S with exactly nnz_target nonzero entries, built from orthogonal
 * internal sectors: modes are grouped into blocks of sizes b_1..b_k
 * (a partition of N with sum b_i^2 = nnz_target), states in different
 * blocks live in disjoint coordinate ranges, so cross-block overlaps are
 * exactly zero.  Unreachable targets raise a validation_error listing the
 * achievable values.
 */
DistinguishabilityMatrix random_gram_with_sparsity(int n, int nnz_target,
                                                   std::uint64_t seed);

/// All values of sum b_i^2 over integer partitions of N, sorted ascending.
std::vector<int> achievable_nonzero_counts(int n);

Permutation random_permutation(int n, std::uint64_t seed);

/// Random action: A a random Gram matrix, sigma uniform.
GramAction random_gram_action(int n, std::uint64_t seed);

/// Canonical channel with num_kraus operators: Gaussian coefficient table
/// with per-column normalization, uniform sigma.
PgioChannel random_pgio_channel(int d, int num_kraus, std::uint64_t seed);

/// Intended membership profile of a generated Kraus set, by construction.
enum class KrausSuiteCase {
  Gio,         // diagonal operators: IO, SIO, FIO, GIO, PGIO
  PgioNotGio,  // one shared non-identity permutation: IO, SIO, FIO, PGIO
  SioNotFio,   // distinct per-operator permutations: IO, SIO
  FioNotSio,   // one shared non-injective support map: IO, FIO
  IoOnly,      // mixed maps, one of them non-injective: IO
};

/// A Kraus set whose classification is known by construction; coefficient
/// entries are generically nonzero so the structural tests see the
/// intended support patterns.
KrausSet structured_kraus_set(KrausSuiteCase which, int d, std::uint64_t seed);

/// The classes structured_kraus_set(which, ...) must land in.
std::set<OpClass> expected_classes(KrausSuiteCase which);

}  // namespace permcoh

#endif  // PERMCOH_GENERATORS_HPP
