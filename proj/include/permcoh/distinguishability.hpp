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

#ifndef PERMCOH_DISTINGUISHABILITY_HPP
#define PERMCOH_DISTINGUISHABILITY_HPP

#include <vector>

#include "permcoh/common.hpp"

namespace permcoh {

/// The internal (non-spatial) states of N photons, one unit vector each,
/// all in the same d-dimensional space.
struct InternalStateSet {
  std::vector<Vector> states;

  explicit InternalStateSet(std::vector<Vector> s);

  int count() const { return static_cast<int>(states.size()); }
  int dimension() const;
  const Vector& operator[](int i) const { return states[static_cast<std::size_t>(i)]; }
};

/*
 * Pairwise-overlap matrix of the photons' internal states:
 * S_ij = <phi_i|phi_j>.  Hermitian, positive semidefinite, |S_ij| <= 1,
 * with the diagonal renormalized to exactly 1 at construction (downstream
 * identities group permutation sums by fixed points and need S_ii == 1).
 */
class DistinguishabilityMatrix {
 public:
  /// Validates Hermiticity, PSD (eigenvalue floor -1e-8 * N), and entry
  /// bounds, then renormalizes the diagonal to exactly 1.
  explicit DistinguishabilityMatrix(Matrix gram);

  const Matrix& gram() const { return gram_; }
  int size() const { return static_cast<int>(gram_.rows()); }
  Complex operator()(int i, int j) const { return gram_(i, j); }

 private:
  Matrix gram_;
};

/// The unit-trace density matrix conj(S)/N associated with an S.
class NormalizedDistinguishability {
 public:
  explicit NormalizedDistinguishability(Matrix rho);

  const Matrix& rho() const { return rho_; }
  int size() const { return static_cast<int>(rho_.rows()); }

  /// Recovers the overlap matrix: N * conj(rho).
  DistinguishabilityMatrix source_gram() const;

 private:
  Matrix rho_;
};

DistinguishabilityMatrix gram_from_states(const InternalStateSet& states);

/// S_ii = 1, S_ij = x for i != j.  PSD for all x in [0,1].
DistinguishabilityMatrix interpolation_family(int n, double x);

/// The rank-one state with entries e^{i(theta_i - theta_j)} / N.
NormalizedDistinguishability maximally_coherent(int n, const std::vector<double>& thetas);

NormalizedDistinguishability normalize(const DistinguishabilityMatrix& s);

/*
 * A set of unit vectors in dimension N whose overlaps reproduce S, built
 * from the eigendecomposition (tiny negative eigenvalues clipped to zero).
 * Used wherever an explicit physical realization of an S is needed.
 */
InternalStateSet states_from_gram(const DistinguishabilityMatrix& s);

}  // namespace permcoh

#endif  // PERMCOH_DISTINGUISHABILITY_HPP
