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

#ifndef PERMCOH_MONOTONES_HPP
#define PERMCOH_MONOTONES_HPP

#include <string>
#include <vector>

#include "permcoh/common.hpp"
#include "permcoh/core.hpp"
#include "permcoh/distinguishability.hpp"

namespace permcoh {

/// Number of entries with |rho_ij| > tol * max|rho|.  0 for the zero matrix.
int nonzero_count(const Matrix& rho, double tol = kDefaultTol);

/// nonzero_count restricted to i != j.
int offdiagonal_count(const Matrix& rho, double tol = kDefaultTol);

/// J_sigma = prod_i |S_{i, sigma(i)}|, a value in [0,1] for unit-diagonal S.
double j_sigma(const Matrix& s, const Permutation& sigma);

struct JaResult {
  double value;
  Permutation sigma;
};

/*
 * The largest J_sigma over permutations with exactly N - a fixed points,
 * together with an achieving permutation (lexicographically smallest image
 * on exact ties).  a = 1 is impossible and rejected; valid a are
 * {0, 2, 3, ..., N}.  Exact enumeration of the C(N,a) * D_a candidates
 * (D_a = derangement count), refused above N = 12.
 */
JaResult j_a(const DistinguishabilityMatrix& s, int a);

struct MonotoneEntry {
  std::string name;
  double before;
  double after;
  bool decreased;  // true when after <= before up to 1e-12 relative slack
};

struct MonotoneReport {
  std::vector<MonotoneEntry> entries;

  bool any_increase() const;
};

/*
 * Evaluates the monotone family {nonzero_count, offdiagonal_count,
 * permanent_abs, every valid J_a} on the normalized states conj(S)/N of
 * both matrices and flags any metric that increased beyond 1e-12 relative.
 * The J_a values carry the (1/N)^N entry scaling of the normalization;
 * comparisons are therefore only meaningful at fixed N.
 */
MonotoneReport monotone_report(const DistinguishabilityMatrix& s_before,
                               const DistinguishabilityMatrix& s_after);

}  // namespace permcoh

#endif  // PERMCOH_MONOTONES_HPP
