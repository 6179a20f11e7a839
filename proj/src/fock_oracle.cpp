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

#include "permcoh/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "permcoh/core.hpp"
#include "permcoh/distinguishability.hpp"

namespace permcoh {

namespace {

constexpr int kMaxPhotons = 4;
constexpr int kMaxModes = 5;
constexpr double kRankTol = 1e-10;

/*
 * Coordinate vectors c_i with <c_i, c_j> = <phi_i, phi_j>.  Two routes
 * produce coordinates in different bases; every downstream quantity is a
 * squared amplitude summed over the internal index, so the choice must
 * not show up in the output distribution.
 */
Matrix internal_coordinates(const InternalStateSet& states, InternalBasis basis) {
  const int n = states.count();
  const int d = states.dimension();
  Matrix phi(d, n);
  for (int i = 0; i < n; ++i) phi.col(i) = states[i];

  if (basis == InternalBasis::HouseholderQr) {
    Eigen::ColPivHouseholderQR<Matrix> qr(phi);
    qr.setThreshold(kRankTol);
    const int rank = static_cast<int>(qr.rank());
    const Matrix q_thin =
        qr.householderQ() * Matrix::Identity(d, std::max(rank, 1));
    return q_thin.adjoint() * phi;
  }

  const Matrix gram = phi.adjoint() * phi;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (es.info() != Eigen::Success)
    throw invariant_error("fock oracle: Gram eigendecomposition failed");
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > kRankTol) kept.push_back(i);
  if (kept.empty()) kept.push_back(n - 1);
  Matrix coords(static_cast<int>(kept.size()), n);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const double root = std::sqrt(std::max(es.eigenvalues()(kept[k]), 0.0));
    coords.row(static_cast<int>(k)) =
        root * es.eigenvectors().col(kept[k]).adjoint();
  }
  return coords;
}

void occupation_patterns(int modes, int photons, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == modes - 1) {
    current.push_back(photons);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = photons; k >= 0; --k) {
    current.push_back(k);
    occupation_patterns(modes, photons - k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::map<std::vector<int>, double> simulate(const Matrix& u, const InternalStateSet& states,
                                            const OccupationVector& n, InternalBasis basis) {
  const int m = static_cast<int>(u.rows());
  const int photons = n.total();
  if (photons < 1 || photons > kMaxPhotons)
    throw capacity_error("fock oracle: photon count outside [1, 4]");
  if (m > kMaxModes) throw capacity_error("fock oracle: more than 5 modes");
  if (n.modes() != m)
    throw validation_error("fock oracle: occupation length must match the mode count");
  if (!n.collision_free())
    throw validation_error("fock oracle: input occupation must be collision-free");
  if (states.count() != photons)
    throw validation_error("fock oracle: one internal state per photon required");
  if (!validate_unitary(u, 1e-8))
    throw validation_error("fock oracle: U is not unitary");
  for (int i = 0; i < photons; ++i)
    if (std::abs(states[i].norm() - 1.0) > 1e-8)
      throw validation_error("fock oracle: internal states must be normalized");

  std::vector<int> input_modes;
  for (int r = 0; r < m; ++r)
    if (n.occupations[r] == 1) input_modes.push_back(r);

  const Matrix coords = internal_coordinates(states, basis);
  const int internal_dim = static_cast<int>(coords.rows());

  // Photon i, injected into mode r_i, spreads to the amplitude
  // u(r_i, c) * coords(alpha, i) on slot (c, alpha).
  const int slot_count = m * internal_dim;
  auto slot_of = [internal_dim](int mode, int alpha) { return mode * internal_dim + alpha; };

  // Expand the product of single-photon forms over creation operators,
  // photon by photon, keyed by the slot multiset.
  std::map<std::vector<int>, Complex> monomials;
  monomials[{}] = 1.0;
  for (int i = 0; i < photons; ++i) {
    std::map<std::vector<int>, Complex> next;
    for (const auto& [key, coeff] : monomials) {
      for (int c = 0; c < m; ++c) {
        for (int alpha = 0; alpha < internal_dim; ++alpha) {
          const Complex w = u(input_modes[i], c) * coords(alpha, i);
          if (std::abs(w) == 0.0) continue;
          std::vector<int> grown = key;
          grown.push_back(slot_of(c, alpha));
          std::sort(grown.begin(), grown.end());
          next[std::move(grown)] += coeff * w;
        }
      }
    }
    monomials = std::move(next);
  }

  // |key> holds slot multiplicities k_s; the normalized Fock amplitude
  // picks up sqrt(prod k_s!), so the probability weight is prod k_s!.
  std::map<std::vector<int>, double> distribution;
  std::vector<int> scratch;
  std::vector<std::vector<int>> patterns;
  occupation_patterns(m, photons, scratch, patterns);
  for (const auto& p : patterns) distribution[p] = 0.0;

  std::vector<int> slot_mult(slot_count);
  for (const auto& [key, coeff] : monomials) {
    std::fill(slot_mult.begin(), slot_mult.end(), 0);
    for (int s : key) ++slot_mult[s];
    double weight = 1.0;
    for (int s : key) weight *= slot_mult[s]--;  // prod k_s! via falling factors
    for (int s : key) slot_mult[s] = 0;
    std::vector<int> pattern(m, 0);
    for (int s : key) ++pattern[s / internal_dim];
    distribution[pattern] += std::norm(coeff) * weight;
  }

  double total = 0.0;
  for (const auto& [pattern, prob] : distribution) total += prob;
  if (std::abs(total - 1.0) > 1e-9)
    throw invariant_error("fock oracle: output distribution does not sum to one");
  return distribution;
}

}  // namespace permcoh
