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

#ifndef PERMCOH_PGIO_HPP
#define PERMCOH_PGIO_HPP

#include <set>
#include <vector>

#include "permcoh/common.hpp"
#include "permcoh/core.hpp"
#include "permcoh/distinguishability.hpp"

namespace permcoh {

/// A Kraus decomposition {K_n}; construction checks sum K_n^dag K_n = I.
struct KrausSet {
  std::vector<Matrix> operators;

  explicit KrausSet(std::vector<Matrix> ops, double tol = kDefaultTol);

  int dimension() const { return static_cast<int>(operators.front().rows()); }
};

/*
 * Canonical form of a permuted genuinely incoherent operation: every Kraus
 * operator is K_n = sum_i c_n^i |sigma(i)><i| with one shared permutation.
 * Completeness becomes sum_n |c_n^i|^2 = 1 for each i.
 */
struct PgioChannel {
  Permutation sigma;
  std::vector<Vector> coefficients;  // coefficients[n][i] = c_n^i

  PgioChannel(Permutation s, std::vector<Vector> coeffs, double tol = kDefaultTol);

  int dimension() const { return sigma.size(); }
  KrausSet to_kraus() const;
};

/*
 * The action of such a channel on a density matrix, reduced to data:
 * rho'_{ij} = (A . rho)_{sigma(i) sigma(j)} where "." is the entrywise
 * product and A is a Gram matrix with unit diagonal.
 */
struct GramAction {
  Matrix A;
  Permutation sigma;

  GramAction(Matrix a, Permutation s);
};

enum class OpClass { IO, SIO, FIO, GIO, PGIO };

/*
 * Structural classification of a Kraus set by the support pattern of its
 * operators (entries with |z| > tol count as nonzero):
 *
 *   IO   every operator has at most one nonzero per column;
 *   SIO  IO and each operator's column->row support map is injective
 *        (zero coefficients leave columns unmapped, so the map is partial;
 *        injectivity is exactly "extends to a permutation");
 *   FIO  IO and all operators agree on one support map (the union of the
 *        partial maps is single-valued);
 *   GIO  every operator is diagonal;
 *   PGIO SIO and FIO together: one permutation shared by the whole set.
 */
std::set<OpClass> classify(const KrausSet& ks, double tol = kDefaultTol);

const char* op_class_name(OpClass c);

Matrix apply_gram_action(const Matrix& rho, const GramAction& act);

/*
 * The GramAction equivalent to a canonical channel:
 * A_ij = sum_n c_n^i conj(c_n^j), and the action's permutation is the
 * INVERSE of the channel's.  (Conjugating by K_n = sum_i c_n^i |s(i)><i|
 * lands entry (i,j) of the input at (s(i), s(j)) of the output, so reading
 * the output at (r,c) pulls from (s^-1(r), s^-1(c)).)
 */
GramAction kraus_to_gram_action(const PgioChannel& ch);

/*
 * The action that turns the zero-phase maximally coherent state into the
 * given target: A = N * target.rho() (a Gram matrix with unit diagonal),
 * sigma = identity.  Entry (i,j) of the result is then
 * (N rho_ij) * (1/N) = rho_ij, an exact reproduction.
 */
GramAction channel_to_target(const NormalizedDistinguishability& target);

/// Entrywise product of two overlap matrices; the overlap matrix of the
/// tensor-product states, still a valid Gram matrix by the Schur theorem.
DistinguishabilityMatrix hadamard_extend(const DistinguishabilityMatrix& s,
                                         const DistinguishabilityMatrix& s_extra);

}  // namespace permcoh

#endif  // PERMCOH_PGIO_HPP
