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

#include "permcoh/distinguishability.hpp"

#include <cmath>

#include "permcoh/core.hpp"

namespace permcoh {

namespace {

constexpr double kPsdFloorPerMode = -1e-8;

void check_gram_invariants(const Matrix& g) {
  if (g.rows() != g.cols())
    throw validation_error("distinguishability matrix: not square");
  ensure_finite(g);
  const int n = static_cast<int>(g.rows());

  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > kDefaultTol)
    throw validation_error("distinguishability matrix: not Hermitian");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(g(i, j)) > 1.0 + kDefaultTol)
        throw validation_error("distinguishability matrix: |S_ij| exceeds 1");

  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdFloorPerMode * n)
    throw validation_error("distinguishability matrix: not positive semidefinite");
}

}  // namespace

InternalStateSet::InternalStateSet(std::vector<Vector> s) : states(std::move(s)) {
  if (states.empty()) throw validation_error("internal states: empty set");
  const Eigen::Index d = states.front().size();
  if (d < 1) throw validation_error("internal states: zero-dimensional state");
  for (const auto& phi : states) {
    if (phi.size() != d)
      throw validation_error("internal states: dimension mismatch");
    if (std::abs(phi.norm() - 1.0) > 1e-8)
      throw validation_error("internal states: state is not normalized");
  }
}

int InternalStateSet::dimension() const {
  return static_cast<int>(states.front().size());
}

DistinguishabilityMatrix::DistinguishabilityMatrix(Matrix gram) : gram_(std::move(gram)) {
  const int n = static_cast<int>(gram_.rows());
  if (n == static_cast<int>(gram_.cols())) {
    // Renormalize the diagonal to exactly 1 before the invariant check;
    // fixed-point grouping downstream depends on S_ii == 1 exactly.
    for (int i = 0; i < n; ++i) {
      const double d = gram_(i, i).real();
      if (d <= 0.0 || std::abs(gram_(i, i).imag()) > kDefaultTol)
        throw validation_error("distinguishability matrix: diagonal must be real positive");
      if (std::abs(d - 1.0) > 1e-6)
        throw validation_error("distinguishability matrix: diagonal entry far from 1");
    }
    for (int i = 0; i < n; ++i) {
      const double di = std::sqrt(gram_(i, i).real());
      for (int j = 0; j < n; ++j) {
        const double dj = std::sqrt(gram_(j, j).real());
        if (i != j) gram_(i, j) /= di * dj;
      }
    }
    for (int i = 0; i < n; ++i) gram_(i, i) = 1.0;
  }
  check_gram_invariants(gram_);
}

NormalizedDistinguishability::NormalizedDistinguishability(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols())
    throw validation_error("normalized state: not square");
  ensure_finite(rho_);
  const int n = static_cast<int>(rho_.rows());
  if (std::abs(rho_.trace().real() - 1.0) > kDefaultTol ||
      std::abs(rho_.trace().imag()) > kDefaultTol)
    throw validation_error("normalized state: trace is not 1");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kDefaultTol)
    throw validation_error("normalized state: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdFloorPerMode * n)
    throw validation_error("normalized state: not positive semidefinite");
}

DistinguishabilityMatrix NormalizedDistinguishability::source_gram() const {
  return DistinguishabilityMatrix(static_cast<double>(size()) * rho_.conjugate());
}

DistinguishabilityMatrix gram_from_states(const InternalStateSet& states) {
  const int n = states.count();
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = states.states[i].dot(states.states[j]);  // conj(phi_i) . phi_j
  return DistinguishabilityMatrix(std::move(g));
}

DistinguishabilityMatrix interpolation_family(int n, double x) {
  if (n < 1) throw validation_error("interpolation family: N must be >= 1");
  if (x < 0.0 || x > 1.0)
    throw validation_error("interpolation family: x must lie in [0, 1]");
  Matrix g = Matrix::Constant(n, n, Complex{x});
  for (int i = 0; i < n; ++i) g(i, i) = 1.0;
  return DistinguishabilityMatrix(std::move(g));
}

NormalizedDistinguishability maximally_coherent(int n, const std::vector<double>& thetas) {
  if (static_cast<int>(thetas.size()) != n)
    throw validation_error("maximally coherent state: phase vector length must be N");
  Matrix rho(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rho(i, j) = std::polar(1.0 / n, thetas[i] - thetas[j]);
  return NormalizedDistinguishability(std::move(rho));
}

NormalizedDistinguishability normalize(const DistinguishabilityMatrix& s) {
  return NormalizedDistinguishability(s.gram().conjugate() / static_cast<double>(s.size()));
}

InternalStateSet states_from_gram(const DistinguishabilityMatrix& s) {
  const int n = s.size();
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.gram());
  Vector lambda = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<Complex>();
  // phi_i = sqrt(Lambda) U^dag e_i realizes <phi_i|phi_j> = S_ij.
  Matrix factor = lambda.asDiagonal() * es.eigenvectors().adjoint();
  std::vector<Vector> states;
  states.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vector phi = factor.col(i);
    phi /= phi.norm();  // unit diagonal of S makes this a no-op up to rounding
    states.push_back(std::move(phi));
  }
  return InternalStateSet(std::move(states));
}

}  // namespace permcoh
