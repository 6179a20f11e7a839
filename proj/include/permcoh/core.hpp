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

#ifndef PERMCOH_CORE_HPP
#define PERMCOH_CORE_HPP

#include <functional>
#include <vector>

#include "permcoh/common.hpp"

namespace permcoh {

/// A permutation of {0..N-1}, stored as its image: sigma maps i to image[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  int fixed_points() const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<int> image_;
};

/// Photon occupation numbers over the modes of an interferometer.
struct OccupationVector {
  std::vector<int> occupations;

  explicit OccupationVector(std::vector<int> occ);

  int modes() const { return static_cast<int>(occupations.size()); }
  int total() const;
  bool collision_free() const;
};

/// True iff mat * mat^dagger is the identity to within tol (max norm).
bool validate_unitary(const Matrix& mat, double tol = kDefaultTol);

/// Throws validation_error if any entry is NaN or infinite.
void ensure_finite(const Matrix& mat);

/*
 * The N x N scattering submatrix for a transition: row i of U is repeated
 * n_i times and column j is repeated m_j times, preserving mode order.
 * n and m must sum to the same photon number.
 */
Matrix submatrix_for_transition(const Matrix& U, const OccupationVector& n,
                                const OccupationVector& m);

/// Calls fn for each of the N! permutations in lexicographic order of the
/// image vector.  Refuses N > kFactorialCutoff.
void enumerate_permutations(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace permcoh

#endif  // PERMCOH_CORE_HPP
