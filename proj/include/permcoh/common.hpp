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

#ifndef PERMCOH_COMMON_HPP
#define PERMCOH_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace permcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;

/// Base class of everything thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: bad dimensions, broken invariants of an argument,
/// malformed serialized data, out-of-range parameters.
class validation_error : public error {
 public:
  using error::error;
};

/// A size cutoff was exceeded (factorial enumeration, subset index width).
class capacity_error : public validation_error {
 public:
  using validation_error::validation_error;
};

/// An internal cross-check failed: two independent evaluations disagree,
/// or a quantity that can only decrease increased.  Always a bug somewhere.
class invariant_error : public error {
 public:
  using error::error;
};

/// Filesystem trouble: unreadable or unwritable paths.
class io_error : public error {
 public:
  using error::error;
};

/// Default absolute tolerance used by structural tests (entry thresholds,
/// Hermiticity checks, completeness checks).
inline constexpr double kDefaultTol = 1e-10;

/// Full permutation-group enumeration is refused above this size.
inline constexpr int kFactorialCutoff = 10;

/// Worker budget for parallel reductions: PERMCOH_THREADS if set (min 1),
/// otherwise the hardware concurrency.
int thread_budget();

inline const char* version_string() {
#ifdef PERMCOH_VERSION_STRING
  return PERMCOH_VERSION_STRING;
#else
  return "0.0.0";
#endif
}

}  // namespace permcoh

#endif  // PERMCOH_COMMON_HPP
