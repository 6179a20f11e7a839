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

#ifndef PERMCOH_PERMANENT_HPP
#define PERMCOH_PERMANENT_HPP

#include <cstdint>

#include "permcoh/common.hpp"

namespace permcoh {

/// Leibniz-sum permanent, a testing oracle.  N <= kFactorialCutoff.
Complex permanent_naive(const Matrix& mat);

/*
 * Permanent by inclusion-exclusion over column subsets with Gray-code
 * incremental row-sum updates: O(2^N N) multiply-adds.  N <= 30.
 *
 * threads > 1 splits the subset range; the partial sums are combined in a
 * fixed order, so the result differs from the sequential one only by
 * floating-point reassociation.  threads == 0 means use thread_budget().
 * If multiplies is non-null it receives the number of complex multiplies
 * executed (identical for any thread count).
 */
Complex permanent_ryser(const Matrix& mat, int threads = 1,
                        std::uint64_t* multiplies = nullptr);

/// Permanent of the entrywise absolute-value matrix.  Real and nonnegative.
double permanent_abs(const Matrix& mat);

/*
 * The capacity-style bound function F(W) = prod_{ij} (1 - p_ij)^(1 - p_ij)
 * for a doubly stochastic W (entries p_ij in [0,1], rows and columns
 * summing to 1).  The convention 0^0 = 1 makes the factors continuous at
 * p = 1.  For W built from a unitary as W_ij = |V_ij|^2 this sandwiches
 * the permanent: F(W) <= perm(W) <= 2^N F(W).
 */
double gurvits_capacity(const Matrix& dsm);

}  // namespace permcoh

#endif  // PERMCOH_PERMANENT_HPP
