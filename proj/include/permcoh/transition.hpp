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

#ifndef PERMCOH_TRANSITION_HPP
#define PERMCOH_TRANSITION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "permcoh/common.hpp"
#include "permcoh/distinguishability.hpp"
#include "permcoh/monotones.hpp"

namespace permcoh {

enum class Algorithm {
  BruteForce,
  InclusionExclusion,
  PrunedInclusionExclusion,
  RyserIndistinguishable,
  PermAbsDistinguishable,
  TruncatedK,
};

const char* algorithm_name(Algorithm a);

struct BoundsRecord {
  /// Permutation-sum bound sum_sigma |perm(V . V*_sigma)| * J_sigma.
  /// Only available when full enumeration is feasible.
  double tighter = 0.0;
  bool tighter_valid = false;
  /// perm(V . V*) * perm(|S|).
  double perm_bound = 0.0;
  /// 2^N * F(V . V*) * perm(|S|) with F the capacity function.
  double gurvits_bound = 0.0;
  /// The probability the chain was checked against.
  double probability = 0.0;
};

/// Index-set pair (rows R, columns C) whose S-submatrix is entirely zero;
/// the subset pair (y = R, x = C) then contributes nothing to the sum.
struct VanishingPair {
  std::vector<int> rows;
  std::vector<int> cols;
};

struct PrunedDetail {
  /// Bookkeeping in the halved convention used for the worked sparse case:
  /// dense baseline 2^{2(N-1)} N^3 / 2, minus N per zero entry of S.
  std::uint64_t baseline_bookkeeping = 0;
  std::uint64_t skipped_bookkeeping = 0;
  std::uint64_t pruned_bookkeeping = 0;
  /// Subset pairs (x, y both nonempty) actually skipped by the zero-pattern
  /// test, i.e. the vanishing pairs realized as lattice points.
  std::uint64_t skipped_nontrivial = 0;
  /// All skipped lattice points, including trivial empty-x / empty-y ones.
  std::uint64_t skipped_total = 0;
  /// Exact number of nonempty (R, C) with S[R x C] == 0.
  std::uint64_t vanishing_pair_count = 0;
  /// The pairs themselves, in lexicographic order; listing stops at 256
  /// entries (the count above stays exact).
  std::vector<VanishingPair> vanishing_pairs;
  /// The subset of vanishing_pairs maximal under containment; only
  /// populated when the listing is complete.
  std::vector<VanishingPair> maximal_pairs;
};

struct TransitionReport {
  double probability = 0.0;
  Algorithm algorithm = Algorithm::BruteForce;
  /// Closed-form operation count for the algorithm (see each evaluator).
  std::uint64_t op_count = 0;
  /// Complex multiplies the evaluation actually executed; deterministic
  /// for a given instance regardless of thread schedule.
  std::uint64_t measured_multiplies = 0;
  std::optional<BoundsRecord> bounds;

  // TruncatedK extras.
  int truncation_k = -1;
  double residual_abs_sum = 0.0;
  double x_estimate = 0.0;

  std::optional<PrunedDetail> pruned;
};

/*
 * Exact probability by the permutation sum
 *   P = sum_mu (prod_i S_{i, mu(i)}) perm(B^mu),
 *   B^mu_{ij} = V_{mu(i), j} conj(V_{ij}),
 * one Ryser permanent per permutation.  For N <= 6 the equivalent double
 * permutation sum is evaluated independently and the two must agree to
 * 1e-9 relative (invariant_error otherwise).
 * op_count: N! * 2^{N-1} N^2.
 */
TransitionReport probability_bruteforce(const Matrix& v, const DistinguishabilityMatrix& s);

/*
 * Exact probability by inclusion-exclusion over subset pairs
 * (x, y) in {0,1}^N x {0,1}^N:
 *   P = sum_{x,y} (-1)^{(N-|x|) + (N-|y|)}
 *       prod_j [ sum_{r,s} y_r x_s V_{sj} conj(V_{rj}) S_{rs} ],
 * with the inner bracket iterating only the nonzero entries of S.
 * op_count: 2^{2(N-1)} * N * nnz(S), nnz counted at the shared threshold.
 * N <= 14.  threads == 0 means thread_budget().
 */
TransitionReport probability_inclusion_exclusion(const Matrix& v,
                                                 const DistinguishabilityMatrix& s,
                                                 int threads = 1);

/*
 * The same sum with a subset-pair skip: any (x, y) whose y-row x x-column
 * S-submatrix is entirely zero is dropped before its product loop.
 * Identical probability, fewer executed multiplies; the report carries the
 * zero-pattern bookkeeping and the derived vanishing pairs.
 */
TransitionReport probability_pruned(const Matrix& v, const DistinguishabilityMatrix& s,
                                    int threads = 1);

/// |perm(V)|^2, the fully indistinguishable value.  op_count: 2^{N-1} N^2.
TransitionReport probability_indistinguishable(const Matrix& v);

/// perm(|V_ij|^2), the fully distinguishable value.  op_count: 2^{N-1} N^2.
TransitionReport probability_distinguishable(const Matrix& v);

/*
 * The permutation sum grouped by a = N - (fixed points of mu).
 * signed_mode=true keeps the complex factors so the terms sum to P
 * exactly; signed_mode=false takes |prod S| * |perm| per permutation,
 * giving the termwise upper bound.  Keys are {0, 2, ..., N}.
 */
std::map<int, Complex> z_decomposition(const Matrix& v, const DistinguishabilityMatrix& s,
                                       bool signed_mode = true);

/*
 * Partial sum P_k over the grouped terms with a <= k, k in {0, 2, .., N}.
 * The report carries the dropped-term magnitude sum_{a>k} |Z_a| and the
 * scale estimate x = (J_k)^{1/k} (0 for k = 0).
 */
TransitionReport probability_truncated(const Matrix& v, const DistinguishabilityMatrix& s,
                                       int k);

/*
 * The three upper bounds and their chain,
 *   P <= tighter <= perm_bound <= gurvits_bound,
 * asserted against the inclusion-exclusion probability with 1e-12 relative
 * slack (invariant_error on violation).  Beyond the factorial cutoff the
 * tighter bound is omitted and the chain starts at perm_bound.
 */
BoundsRecord bounds(const Matrix& v, const DistinguishabilityMatrix& s);

/// nnz of conj(S)/N at the shared threshold; the quantity the op-count
/// formula consumes.
int gram_nonzeros(const DistinguishabilityMatrix& s);

}  // namespace permcoh

#endif  // PERMCOH_TRANSITION_HPP
