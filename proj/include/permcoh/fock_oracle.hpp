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

#ifndef PERMCOH_FOCK_ORACLE_HPP
#define PERMCOH_FOCK_ORACLE_HPP

#include <map>
#include <vector>

#include "permcoh/common.hpp"
#include "permcoh/core.hpp"
#include "permcoh/distinguishability.hpp"

namespace permcoh {

/// How the internal span is orthonormalized before the state-vector run.
/// The output distribution must not depend on the choice.
enum class InternalBasis { GramEigen, HouseholderQr };

/*
 * Direct state-vector simulation of N photons entering a passive M-mode
 * network, each carrying an internal state.  Photon occupation i of mode r
 * evolves as a creation operator: a_r -> sum_c U_{rc} a_c, with the
 * internal state untouched.  Returns the probability of every output mode
 * occupation (collision outputs included); the values sum to 1.
 *
 * This is a physics-level oracle, deliberately independent of any
 * permanent formula, and hard-capped at N <= 4 photons, M <= 5 modes.
 * The input occupation must be collision-free.
 */
std::map<std::vector<int>, double> simulate(
    const Matrix& u, const InternalStateSet& states, const OccupationVector& n,
    InternalBasis basis = InternalBasis::GramEigen);

}  // namespace permcoh

#endif  // PERMCOH_FOCK_ORACLE_HPP
