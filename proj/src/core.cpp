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

#include "permcoh/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace permcoh {

int thread_budget() {
  if (const char* env = std::getenv("PERMCOH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n == 0) throw validation_error("permutation: empty image");
  std::vector<char> seen(n, 0);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[v])
      throw validation_error("permutation: image is not a bijection on {0..N-1}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

int Permutation::fixed_points() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (image_[i] == i) ++c;
  return c;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const { return fixed_points() == size(); }

OccupationVector::OccupationVector(std::vector<int> occ) : occupations(std::move(occ)) {
  if (occupations.empty()) throw validation_error("occupation vector: no modes");
  for (int v : occupations)
    if (v < 0) throw validation_error("occupation vector: negative occupation");
  if (total() < 1) throw validation_error("occupation vector: total photon number must be >= 1");
}

int OccupationVector::total() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

bool OccupationVector::collision_free() const {
  return std::all_of(occupations.begin(), occupations.end(),
                     [](int v) { return v <= 1; });
}

bool validate_unitary(const Matrix& mat, double tol) {
  if (mat.rows() != mat.cols())
    throw validation_error("validate_unitary: matrix is not square");
  ensure_finite(mat);
  Matrix prod = mat * mat.adjoint();
  prod -= Matrix::Identity(mat.rows(), mat.cols());
  return prod.cwiseAbs().maxCoeff() <= tol;
}

void ensure_finite(const Matrix& mat) {
  for (Eigen::Index j = 0; j < mat.cols(); ++j)
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      const Complex z = mat(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw validation_error("matrix entry is not finite");
    }
}

Matrix submatrix_for_transition(const Matrix& U, const OccupationVector& n,
                                const OccupationVector& m) {
  if (U.rows() != U.cols()) throw validation_error("submatrix: U is not square");
  const int modes = static_cast<int>(U.rows());
  if (n.modes() != modes || m.modes() != modes)
    throw validation_error("submatrix: occupation length does not match U");
  const int photons = n.total();
  if (photons != m.total())
    throw validation_error("submatrix: input and output photon numbers differ");

  std::vector<int> rows, cols;
  rows.reserve(photons);
  cols.reserve(photons);
  for (int i = 0; i < modes; ++i)
    for (int k = 0; k < n.occupations[i]; ++k) rows.push_back(i);
  for (int j = 0; j < modes; ++j)
    for (int k = 0; k < m.occupations[j]; ++k) cols.push_back(j);

  Matrix V(photons, photons);
  for (int i = 0; i < photons; ++i)
    for (int j = 0; j < photons; ++j) V(i, j) = U(rows[i], cols[j]);
  return V;
}

void enumerate_permutations(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 1) throw validation_error("enumerate_permutations: N must be >= 1");
  if (n > kFactorialCutoff)
    throw capacity_error("enumerate_permutations: N exceeds the factorial cutoff " +
                         std::to_string(kFactorialCutoff));
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace permcoh
