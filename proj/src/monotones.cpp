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

#include "permcoh/monotones.hpp"

#include <algorithm>
#include <cmath>

#include "permcoh/permanent.hpp"

namespace permcoh {

namespace {

constexpr int kJaCutoff = 12;

// Walks every derangement of the subset values over the subset positions
// (no value on its own index), tracking the largest |entry| product.
struct DerangementSearch {
  const Matrix& s;
  const std::vector<int>& positions;
  std::vector<int> assigned;  // assigned[t] = value placed at positions[t]
  std::vector<char> used;
  double prefix = 1.0;
  double best = -1.0;
  std::vector<int> best_assigned;

  DerangementSearch(const Matrix& mat, const std::vector<int>& pos)
      : s(mat), positions(pos), assigned(pos.size(), -1), used(pos.size(), 0) {}

  void run(std::size_t t) {
    const std::size_t a = positions.size();
    if (t == a) {
      if (prefix > best) {
        best = prefix;
        best_assigned = assigned;
      }
      return;
    }
    for (std::size_t v = 0; v < a; ++v) {
      if (used[v] || v == t) continue;  // v == t would be a fixed point
      used[v] = 1;
      assigned[t] = positions[v];
      const double saved = prefix;
      prefix *= std::abs(s(positions[t], positions[v]));
      run(t + 1);
      prefix = saved;
      used[v] = 0;
    }
  }
};

/*
 * Max of prod_i |S_{i, sigma(i)}| over permutations moving exactly the
 * elements of an a-subset.  Subsets advance in lexicographic order and the
 * backtracking tries values in ascending order, so on exact value ties the
 * lexicographically smallest full image is kept.
 */
JaResult j_a_on(const Matrix& s, int a) {
  const int n = static_cast<int>(s.rows());
  if (a == 1 || a < 0 || a > n)
    throw validation_error("j_a: a must lie in {0, 2, ..., N}");
  if (n > kJaCutoff)
    throw capacity_error("j_a: exact enumeration is limited to N <= 12");
  if (a == 0) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= std::abs(s(i, i));
    return {prod, Permutation::identity(n)};
  }

  double best = -1.0;
  std::vector<int> best_image;

  std::vector<int> subset(a);
  for (int i = 0; i < a; ++i) subset[i] = i;
  while (true) {
    DerangementSearch search(s, subset);
    search.run(0);
    if (search.best >= 0.0) {
      // The identity part multiplies in the fixed diagonal entries.
      double value = search.best;
      for (int i = 0, t = 0; i < n; ++i) {
        if (t < a && subset[t] == i) {
          ++t;
          continue;
        }
        value *= std::abs(s(i, i));
      }
      std::vector<int> image(n);
      for (int i = 0; i < n; ++i) image[i] = i;
      for (int t = 0; t < a; ++t) image[subset[t]] = search.best_assigned[t];
      if (value > best || (value == best && (best_image.empty() || image < best_image))) {
        best = value;
        best_image = std::move(image);
      }
    }
    int i = a - 1;
    while (i >= 0 && subset[i] == n - a + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int k = i + 1; k < a; ++k) subset[k] = subset[k - 1] + 1;
  }

  return {best, Permutation(best_image)};
}

}  // namespace

int nonzero_count(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols())
    throw validation_error("nonzero_count: matrix is not square");
  const double max_entry = rho.cwiseAbs().maxCoeff();
  if (max_entry == 0.0) return 0;
  int count = 0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (std::abs(rho(i, j)) > tol * max_entry) ++count;
  return count;
}

int offdiagonal_count(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols())
    throw validation_error("offdiagonal_count: matrix is not square");
  const double max_entry = rho.cwiseAbs().maxCoeff();
  if (max_entry == 0.0) return 0;
  int count = 0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (i != j && std::abs(rho(i, j)) > tol * max_entry) ++count;
  return count;
}

double j_sigma(const Matrix& s, const Permutation& sigma) {
  if (s.rows() != s.cols() || static_cast<int>(s.rows()) != sigma.size())
    throw validation_error("j_sigma: dimension mismatch");
  double prod = 1.0;
  for (int i = 0; i < sigma.size(); ++i) prod *= std::abs(s(i, sigma[i]));
  return prod;
}

JaResult j_a(const DistinguishabilityMatrix& s, int a) { return j_a_on(s.gram(), a); }

bool MonotoneReport::any_increase() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const MonotoneEntry& e) { return !e.decreased; });
}

MonotoneReport monotone_report(const DistinguishabilityMatrix& s_before,
                               const DistinguishabilityMatrix& s_after) {
  if (s_before.size() != s_after.size())
    throw validation_error("monotone_report: dimension mismatch");
  const int n = s_before.size();
  const Matrix rho_b = normalize(s_before).rho();
  const Matrix rho_a = normalize(s_after).rho();

  MonotoneReport report;
  auto push = [&report](std::string name, double before, double after) {
    const double slack = 1e-12 * std::max(1.0, std::abs(before));
    report.entries.push_back({std::move(name), before, after, after <= before + slack});
  };

  push("nonzero_count", nonzero_count(rho_b), nonzero_count(rho_a));
  push("offdiagonal_count", offdiagonal_count(rho_b), offdiagonal_count(rho_a));
  push("permanent_abs", permanent_abs(rho_b), permanent_abs(rho_a));
  for (int a = 0; a <= n; ++a) {
    if (a == 1) continue;
    push("j_" + std::to_string(a), j_a_on(rho_b, a).value, j_a_on(rho_a, a).value);
  }
  return report;
}

}  // namespace permcoh
