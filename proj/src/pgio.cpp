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

#include "permcoh/pgio.hpp"

#include <cmath>
#include <optional>

namespace permcoh {

KrausSet::KrausSet(std::vector<Matrix> ops, double tol) : operators(std::move(ops)) {
  if (operators.empty()) throw validation_error("kraus set: no operators");
  const Eigen::Index d = operators.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : operators) {
    if (k.rows() != d || k.cols() != d)
      throw validation_error("kraus set: operators must be square with one shared dimension");
    ensure_finite(k);
    sum += k.adjoint() * k;
  }
  sum -= Matrix::Identity(d, d);
  if (sum.cwiseAbs().maxCoeff() > tol)
    throw validation_error("kraus set: completeness sum K^dag K != I");
}

PgioChannel::PgioChannel(Permutation s, std::vector<Vector> coeffs, double tol)
    : sigma(std::move(s)), coefficients(std::move(coeffs)) {
  const int d = sigma.size();
  if (coefficients.empty()) throw validation_error("channel: no coefficient rows");
  for (const auto& c : coefficients)
    if (static_cast<int>(c.size()) != d)
      throw validation_error("channel: coefficient row length must match the permutation size");
  for (int i = 0; i < d; ++i) {
    double norm2 = 0.0;
    for (const auto& c : coefficients) norm2 += std::norm(c[i]);
    if (std::abs(norm2 - 1.0) > tol)
      throw validation_error("channel: sum_n |c_n^i|^2 != 1 for some i");
  }
}

KrausSet PgioChannel::to_kraus() const {
  const int d = dimension();
  std::vector<Matrix> ops;
  ops.reserve(coefficients.size());
  for (const auto& c : coefficients) {
    Matrix k = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) k(sigma[i], i) = c[i];
    ops.push_back(std::move(k));
  }
  return KrausSet(std::move(ops));
}

GramAction::GramAction(Matrix a, Permutation s) : A(std::move(a)), sigma(std::move(s)) {
  if (A.rows() != A.cols() || static_cast<int>(A.rows()) != sigma.size())
    throw validation_error("gram action: A must be square and match sigma");
  // A must itself be a Gram matrix with unit diagonal; reuse the
  // distinguishability validation (including its diagonal renormalization).
  DistinguishabilityMatrix check(A);
  A = check.gram();
}

namespace {

// Column -> row support maps of one operator; nullopt while unmapped.
std::vector<std::optional<int>> support_map(const Matrix& k, double tol, bool& io_ok) {
  const int d = static_cast<int>(k.rows());
  std::vector<std::optional<int>> f(d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      if (std::abs(k(i, j)) > tol) {
        if (f[j].has_value()) {
          io_ok = false;
          return f;
        }
        f[j] = i;
      }
    }
  }
  return f;
}

}  // namespace

std::set<OpClass> classify(const KrausSet& ks, double tol) {
  const int d = ks.dimension();
  bool io = true, sio = true, fio = true, gio = true;

  std::vector<std::optional<int>> shared(d);
  for (const auto& k : ks.operators) {
    bool io_ok = true;
    auto f = support_map(k, tol, io_ok);
    if (!io_ok) {
      io = false;
      break;
    }
    std::vector<char> hit(d, 0);
    for (int j = 0; j < d; ++j) {
      if (!f[j].has_value()) continue;
      const int r = *f[j];
      if (r != j) gio = false;
      if (hit[r]) sio = false;  // two columns land on one row: not injective
      hit[r] = 1;
      if (shared[j].has_value() && *shared[j] != r)
        fio = false;  // operators disagree about where column j goes
      shared[j] = r;
    }
  }

  std::set<OpClass> result;
  if (!io) return result;
  result.insert(OpClass::IO);
  if (sio) result.insert(OpClass::SIO);
  if (fio) result.insert(OpClass::FIO);
  if (gio) result.insert(OpClass::GIO);
  if (sio && fio) result.insert(OpClass::PGIO);
  return result;
}

const char* op_class_name(OpClass c) {
  switch (c) {
    case OpClass::IO: return "IO";
    case OpClass::SIO: return "SIO";
    case OpClass::FIO: return "FIO";
    case OpClass::GIO: return "GIO";
    case OpClass::PGIO: return "pGIO";
  }
  return "?";
}

Matrix apply_gram_action(const Matrix& rho, const GramAction& act) {
  const int n = static_cast<int>(rho.rows());
  if (rho.cols() != rho.rows())
    throw validation_error("apply_gram_action: rho is not square");
  if (n != act.sigma.size())
    throw validation_error("apply_gram_action: dimension mismatch");
  ensure_finite(rho);
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int si = act.sigma[i];
      const int sj = act.sigma[j];
      out(i, j) = act.A(si, sj) * rho(si, sj);
    }
  return out;
}

GramAction kraus_to_gram_action(const PgioChannel& ch) {
  const int d = ch.dimension();
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex sum = 0.0;
      for (const auto& c : ch.coefficients) sum += c[i] * std::conj(c[j]);
      a(i, j) = sum;
    }
  return GramAction(std::move(a), ch.sigma.inverse());
}

GramAction channel_to_target(const NormalizedDistinguishability& target) {
  const int n = target.size();
  Matrix a = static_cast<double>(n) * target.rho();
  return GramAction(std::move(a), Permutation::identity(n));
}

DistinguishabilityMatrix hadamard_extend(const DistinguishabilityMatrix& s,
                                         const DistinguishabilityMatrix& s_extra) {
  if (s.size() != s_extra.size())
    throw validation_error("hadamard_extend: dimension mismatch");
  return DistinguishabilityMatrix(s.gram().cwiseProduct(s_extra.gram()));
}

}  // namespace permcoh
