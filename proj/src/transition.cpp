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

#include "permcoh/transition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "permcoh/core.hpp"
#include "permcoh/monotones.hpp"
#include "permcoh/permanent.hpp"

namespace permcoh {

namespace {

constexpr int kSubsetCutoff = 14;  // 4^N subset pairs
constexpr double kRealityTol = 1e-9;

void check_instance(const Matrix& v, const DistinguishabilityMatrix& s, const char* who) {
  if (v.rows() != v.cols())
    throw validation_error(std::string(who) + ": V is not square");
  ensure_finite(v);
  if (static_cast<int>(v.rows()) != s.size())
    throw validation_error(std::string(who) + ": V and S dimensions differ");
}

// Accepts the accumulated complex total as a probability: the imaginary
// part must be rounding residue and the real part not meaningfully
// negative.
double as_probability(Complex total, const char* who) {
  const double scale = std::max(1.0, std::abs(total.real()));
  if (std::abs(total.imag()) > kRealityTol * scale)
    throw invariant_error(std::string(who) + ": probability has a non-real residue");
  if (total.real() < -kRealityTol)
    throw invariant_error(std::string(who) + ": probability is negative");
  return total.real();
}

// B^mu_{ij} = V_{mu(i), j} * conj(V_{ij}); perm(B^mu) is the interference
// term attached to the overlap product of mu.
Matrix permuted_interference(const Matrix& v, const Permutation& mu) {
  const int n = static_cast<int>(v.rows());
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = v(mu[i], j) * std::conj(v(i, j));
  return b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t derangements(int a) {
  if (a == 0) return 1;
  if (a == 1) return 0;
  std::uint64_t d0 = 1, d1 = 0;
  for (int k = 2; k <= a; ++k) {
    const std::uint64_t dk = static_cast<std::uint64_t>(k - 1) * (d1 + d0);
    d0 = d1;
    d1 = dk;
  }
  return d1;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / i;
  return b;
}

std::uint64_t ryser_op_count(int n) {
  return (std::uint64_t{1} << (n - 1)) * static_cast<std::uint64_t>(n) * n;
}

struct Triple {
  int r;
  int s;
  Complex val;
};

// Nonzero entries of S at the shared entry threshold (unit diagonal makes
// the max entry 1, so the threshold is absolute in practice).
std::vector<Triple> nonzero_triples(const DistinguishabilityMatrix& s) {
  const int n = s.size();
  const double max_entry = s.gram().cwiseAbs().maxCoeff();
  std::vector<Triple> nz;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (std::abs(s(r, c)) > kDefaultTol * max_entry) nz.push_back({r, c, s(r, c)});
  return nz;
}

struct SubsetSumResult {
  Complex total = 0.0;
  std::uint64_t multiplies = 0;
  std::uint64_t skipped_total = 0;
  std::uint64_t skipped_nontrivial = 0;
};

/*
 * The inclusion-exclusion core shared by the plain and pruned evaluators:
 *
 *   P = sum_{x,y} (-1)^{(N-|x|) + (N-|y|)} prod_j bracket_j(x, y),
 *   bracket_j = sum over nonzero S entries (r, s) with y_r = x_s = 1 of
 *               V_{sj} conj(V_{rj}) S_{rs}.
 *
 * The S-independent factors V_{sj} conj(V_{rj}) are precomputed once per
 * triple; the bracket then costs one complex multiply per active triple
 * per column, which is exactly the operation the closed-form count prices.
 * With prune set, a subset pair whose active triple set is empty is
 * dropped before the product loop.
 */
SubsetSumResult ie_subset_sum_range(const Matrix& v, const std::vector<Triple>& nz,
                                    const std::vector<Complex>& vv, bool prune,
                                    const std::vector<std::uint32_t>& zrow,
                                    std::uint32_t y_first, std::uint32_t y_last) {
  const int n = static_cast<int>(v.rows());
  const std::uint32_t x_count = std::uint32_t{1} << n;
  SubsetSumResult out;

  std::vector<Complex> acc(n);
  std::vector<int> active;
  active.reserve(nz.size());

  for (std::uint32_t y = y_first; y < y_last; ++y) {
    std::uint32_t reach = 0;  // columns of S reachable from the y rows
    for (int r = 0; r < n; ++r)
      if (y >> r & 1) reach |= zrow[r];
    const int y_missing = n - std::popcount(y);

    for (std::uint32_t x = 0; x < x_count; ++x) {
      if (prune && (reach & x) == 0) {
        ++out.skipped_total;
        if (x != 0 && y != 0) ++out.skipped_nontrivial;
        continue;
      }

      active.clear();
      for (std::size_t t = 0; t < nz.size(); ++t)
        if ((y >> nz[t].r & 1) && (x >> nz[t].s & 1)) active.push_back(static_cast<int>(t));

      std::fill(acc.begin(), acc.end(), Complex{0.0});
      for (int t : active) {
        const Complex sval = nz[t].val;
        const Complex* row = &vv[static_cast<std::size_t>(t) * n];
        for (int j = 0; j < n; ++j) acc[j] += row[j] * sval;
      }
      out.multiplies += static_cast<std::uint64_t>(active.size()) * n;

      Complex prod = acc[0];
      for (int j = 1; j < n; ++j) prod *= acc[j];
      out.multiplies += static_cast<std::uint64_t>(n - 1);

      const int missing = y_missing + (n - std::popcount(x));
      out.total += (missing & 1) ? -prod : prod;
    }
  }
  return out;
}

SubsetSumResult ie_subset_sum(const Matrix& v, const DistinguishabilityMatrix& s,
                              bool prune, int threads) {
  const int n = static_cast<int>(v.rows());
  if (n > kSubsetCutoff)
    throw capacity_error("inclusion-exclusion: N > 14 exceeds the subset-pair cutoff");
  if (threads == 0) threads = thread_budget();

  const std::vector<Triple> nz = nonzero_triples(s);
  std::vector<Complex> vv(nz.size() * static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < nz.size(); ++t)
    for (int j = 0; j < n; ++j)
      vv[t * n + j] = v(nz[t].s, j) * std::conj(v(nz[t].r, j));

  std::vector<std::uint32_t> zrow(n, 0);
  for (const Triple& t : nz) zrow[t.r] |= std::uint32_t{1} << t.s;

  const std::uint32_t y_count = std::uint32_t{1} << n;
  SubsetSumResult total;
  total.multiplies = nz.size() * static_cast<std::uint64_t>(n);  // vv precompute

  if (threads <= 1 || n < 8) {
    SubsetSumResult r = ie_subset_sum_range(v, nz, vv, prune, zrow, 0, y_count);
    total.total = r.total;
    total.multiplies += r.multiplies;
    total.skipped_total = r.skipped_total;
    total.skipped_nontrivial = r.skipped_nontrivial;
    return total;
  }

  const int workers = std::min<int>(threads, static_cast<int>(y_count));
  std::vector<SubsetSumResult> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint32_t chunk = y_count / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint32_t first = chunk * w;
    const std::uint32_t last = (w == workers - 1) ? y_count : first + chunk;
    pool.emplace_back([&, w, first, last] {
      partial[w] = ie_subset_sum_range(v, nz, vv, prune, zrow, first, last);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& r : partial) {
    total.total += r.total;
    total.multiplies += r.multiplies;
    total.skipped_total += r.skipped_total;
    total.skipped_nontrivial += r.skipped_nontrivial;
  }
  return total;
}

/*
 * All nonempty (R, C) with S[R x C] identically zero: for each row set R
 * the candidate columns are the AND of the rows' zero masks, and every
 * nonempty subset of that mask qualifies.  The explicit list is capped;
 * the count is always exact.
 */
void derive_vanishing_pairs(const DistinguishabilityMatrix& s, PrunedDetail& detail) {
  constexpr std::uint64_t kListCap = 256;
  const int n = s.size();
  const double max_entry = s.gram().cwiseAbs().maxCoeff();
  std::vector<std::uint32_t> zero_mask(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (std::abs(s(r, c)) <= kDefaultTol * max_entry) zero_mask[r] |= std::uint32_t{1} << c;

  auto to_indices = [n](std::uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    return idx;
  };

  const std::uint32_t r_count = std::uint32_t{1} << n;
  for (std::uint32_t rset = 1; rset < r_count; ++rset) {
    std::uint32_t cols = (std::uint32_t{1} << n) - 1;
    for (int r = 0; r < n; ++r)
      if (rset >> r & 1) cols &= zero_mask[r];
    if (cols == 0) continue;
    const std::uint32_t c_subsets = (std::uint32_t{1} << std::popcount(cols)) - 1;
    detail.vanishing_pair_count += c_subsets;
    if (detail.vanishing_pairs.size() < kListCap) {
      // enumerate nonempty subsets of the column mask
      for (std::uint32_t sub = cols; sub != 0; sub = (sub - 1) & cols) {
        if (detail.vanishing_pairs.size() >= kListCap) break;
        detail.vanishing_pairs.push_back({to_indices(rset), to_indices(sub)});
      }
    }
  }

  std::sort(detail.vanishing_pairs.begin(), detail.vanishing_pairs.end(),
            [](const VanishingPair& a, const VanishingPair& b) {
              if (a.rows != b.rows) return a.rows < b.rows;
              return a.cols < b.cols;
            });

  // Maximality needs the complete pair set; a truncated list stays raw.
  if (detail.vanishing_pair_count != detail.vanishing_pairs.size()) return;

  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (const auto& p : detail.vanishing_pairs) {
    bool maximal = true;
    for (const auto& q : detail.vanishing_pairs) {
      if (&p == &q) continue;
      if (contains(q.rows, p.rows) && contains(q.cols, p.cols) &&
          (q.rows.size() > p.rows.size() || q.cols.size() > p.cols.size())) {
        maximal = false;
        break;
      }
    }
    if (maximal) detail.maximal_pairs.push_back(p);
  }
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::BruteForce: return "BruteForce";
    case Algorithm::InclusionExclusion: return "InclusionExclusion";
    case Algorithm::PrunedInclusionExclusion: return "PrunedInclusionExclusion";
    case Algorithm::RyserIndistinguishable: return "RyserIndistinguishable";
    case Algorithm::PermAbsDistinguishable: return "PermAbsDistinguishable";
    case Algorithm::TruncatedK: return "TruncatedK";
  }
  return "?";
}

int gram_nonzeros(const DistinguishabilityMatrix& s) {
  return nonzero_count(normalize(s).rho(), kDefaultTol);
}

TransitionReport probability_bruteforce(const Matrix& v, const DistinguishabilityMatrix& s) {
  check_instance(v, s, "probability_bruteforce");
  const int n = static_cast<int>(v.rows());
  if (n > kFactorialCutoff)
    throw capacity_error("probability_bruteforce: N exceeds the factorial cutoff");

  Complex total = 0.0;
  std::uint64_t mults = 0;
  enumerate_permutations(n, [&](const Permutation& mu) {
    Complex sp = 1.0;
    for (int i = 0; i < n; ++i) sp *= s(i, mu[i]);
    std::uint64_t ryser_mults = 0;
    const Complex pm = permanent_ryser(permuted_interference(v, mu), 1, &ryser_mults);
    total += sp * pm;
    mults += static_cast<std::uint64_t>(n - 1) + ryser_mults + 1;
  });

  // Independent double permutation sum; must agree for small N.
  if (n <= 6) {
    Complex p7 = 0.0;
    enumerate_permutations(n, [&](const Permutation& sig) {
      enumerate_permutations(n, [&](const Permutation& rho) {
        Complex prod = 1.0;
        for (int j = 0; j < n; ++j)
          prod *= v(sig[j], j) * std::conj(v(rho[j], j)) * s(rho[j], sig[j]);
        p7 += prod;
      });
    });
    const double scale = std::max(1.0, std::abs(total));
    if (std::abs(total - p7) > 1e-9 * scale)
      throw invariant_error(
          "probability_bruteforce: permutation sum and double sum disagree");
  }

  TransitionReport report;
  report.probability = as_probability(total, "probability_bruteforce");
  report.algorithm = Algorithm::BruteForce;
  report.op_count = factorial(n) * ryser_op_count(n);
  report.measured_multiplies = mults;
  return report;
}

TransitionReport probability_inclusion_exclusion(const Matrix& v,
                                                 const DistinguishabilityMatrix& s,
                                                 int threads) {
  check_instance(v, s, "probability_inclusion_exclusion");
  const int n = static_cast<int>(v.rows());
  const SubsetSumResult sum = ie_subset_sum(v, s, /*prune=*/false, threads);

  TransitionReport report;
  report.probability = as_probability(sum.total, "probability_inclusion_exclusion");
  report.algorithm = Algorithm::InclusionExclusion;
  const int nnz = gram_nonzeros(s);
  report.op_count = (std::uint64_t{1} << (2 * (n - 1))) *
                    static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(nnz);
  report.measured_multiplies = sum.multiplies;
  return report;
}

TransitionReport probability_pruned(const Matrix& v, const DistinguishabilityMatrix& s,
                                    int threads) {
  check_instance(v, s, "probability_pruned");
  const int n = static_cast<int>(v.rows());
  const SubsetSumResult sum = ie_subset_sum(v, s, /*prune=*/true, threads);

  TransitionReport report;
  report.probability = as_probability(sum.total, "probability_pruned");
  report.algorithm = Algorithm::PrunedInclusionExclusion;
  const int nnz = gram_nonzeros(s);
  report.op_count = (std::uint64_t{1} << (2 * (n - 1))) *
                    static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(nnz);
  report.measured_multiplies = sum.multiplies;

  PrunedDetail detail;
  const std::uint64_t dense = (std::uint64_t{1} << (2 * (n - 1))) *
                              static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
                              static_cast<std::uint64_t>(n);
  detail.baseline_bookkeeping = dense / 2;
  const std::uint64_t zeros = static_cast<std::uint64_t>(n) * n - static_cast<std::uint64_t>(nnz);
  detail.skipped_bookkeeping = static_cast<std::uint64_t>(n) * zeros;
  detail.pruned_bookkeeping = detail.baseline_bookkeeping - detail.skipped_bookkeeping;
  detail.skipped_nontrivial = sum.skipped_nontrivial;
  detail.skipped_total = sum.skipped_total;
  derive_vanishing_pairs(s, detail);
  report.pruned = std::move(detail);
  return report;
}

TransitionReport probability_indistinguishable(const Matrix& v) {
  if (v.rows() != v.cols())
    throw validation_error("probability_indistinguishable: V is not square");
  ensure_finite(v);
  const int n = static_cast<int>(v.rows());
  std::uint64_t mults = 0;
  const Complex p = permanent_ryser(v, 1, &mults);
  TransitionReport report;
  report.probability = std::norm(p);
  report.algorithm = Algorithm::RyserIndistinguishable;
  report.op_count = ryser_op_count(n);
  report.measured_multiplies = mults + 1;
  return report;
}

TransitionReport probability_distinguishable(const Matrix& v) {
  if (v.rows() != v.cols())
    throw validation_error("probability_distinguishable: V is not square");
  ensure_finite(v);
  const int n = static_cast<int>(v.rows());
  const Matrix w = v.cwiseProduct(v.conjugate());
  std::uint64_t mults = 0;
  const Complex p = permanent_ryser(w, 1, &mults);
  TransitionReport report;
  report.probability = as_probability(p, "probability_distinguishable");
  report.algorithm = Algorithm::PermAbsDistinguishable;
  report.op_count = ryser_op_count(n);
  report.measured_multiplies = mults + static_cast<std::uint64_t>(n) * n;
  return report;
}

namespace {

std::map<int, Complex> z_decomposition_counted(const Matrix& v,
                                               const DistinguishabilityMatrix& s,
                                               bool signed_mode, std::uint64_t* multiplies) {
  check_instance(v, s, "z_decomposition");
  const int n = static_cast<int>(v.rows());
  if (n > kFactorialCutoff)
    throw capacity_error("z_decomposition: N exceeds the factorial cutoff");

  std::map<int, Complex> terms;
  terms[0] = 0.0;
  for (int a = 2; a <= n; ++a) terms[a] = 0.0;

  std::uint64_t mults = 0;
  enumerate_permutations(n, [&](const Permutation& mu) {
    const int a = n - mu.fixed_points();
    Complex sp = 1.0;
    for (int i = 0; i < n; ++i) sp *= s(i, mu[i]);
    std::uint64_t ryser_mults = 0;
    const Complex pm = permanent_ryser(permuted_interference(v, mu), 1, &ryser_mults);
    mults += static_cast<std::uint64_t>(n - 1) + ryser_mults + 1;
    if (signed_mode)
      terms[a] += sp * pm;
    else
      terms[a] += std::abs(sp) * std::abs(pm);
  });
  if (multiplies) *multiplies = mults;
  return terms;
}

}  // namespace

std::map<int, Complex> z_decomposition(const Matrix& v, const DistinguishabilityMatrix& s,
                                       bool signed_mode) {
  return z_decomposition_counted(v, s, signed_mode, nullptr);
}

TransitionReport probability_truncated(const Matrix& v, const DistinguishabilityMatrix& s,
                                       int k) {
  check_instance(v, s, "probability_truncated");
  const int n = static_cast<int>(v.rows());
  if (k == 1 || k < 0 || k > n)
    throw validation_error("probability_truncated: k must lie in {0, 2, ..., N}");

  std::uint64_t decomposition_mults = 0;
  const std::map<int, Complex> terms =
      z_decomposition_counted(v, s, /*signed_mode=*/true, &decomposition_mults);
  Complex partial = 0.0;
  double residual = 0.0;
  std::uint64_t kept_sigmas = 0;
  for (const auto& [a, z] : terms) {
    if (a <= k) {
      partial += z;
      kept_sigmas += binomial(n, a) * derangements(a);
    } else {
      residual += std::abs(z);
    }
  }

  TransitionReport report;
  const double scale = std::max(1.0, std::abs(partial.real()));
  if (std::abs(partial.imag()) > kRealityTol * scale)
    throw invariant_error("probability_truncated: partial sum has a non-real residue");
  report.probability = partial.real();
  report.algorithm = Algorithm::TruncatedK;
  report.op_count = kept_sigmas * ryser_op_count(n);
  // The full decomposition is evaluated (the residual needs the dropped
  // terms), so the measured work exceeds the truncated-evaluation count.
  report.measured_multiplies = decomposition_mults;
  report.truncation_k = k;
  report.residual_abs_sum = residual;
  report.x_estimate = (k >= 2) ? std::pow(j_a(s, k).value, 1.0 / k) : 0.0;
  return report;
}

BoundsRecord bounds(const Matrix& v, const DistinguishabilityMatrix& s) {
  check_instance(v, s, "bounds");
  const int n = static_cast<int>(v.rows());

  BoundsRecord rec;
  rec.probability = probability_inclusion_exclusion(v, s).probability;

  if (n <= kFactorialCutoff) {
    double tighter = 0.0;
    enumerate_permutations(n, [&](const Permutation& mu) {
      double jfac = 1.0;
      for (int i = 0; i < n; ++i) jfac *= std::abs(s(i, mu[i]));
      tighter += std::abs(permanent_ryser(permuted_interference(v, mu))) * jfac;
    });
    rec.tighter = tighter;
    rec.tighter_valid = true;
  }

  const Matrix w = v.cwiseProduct(v.conjugate());
  const double perm_w = permanent_ryser(w).real();
  const double perm_abs_s = permanent_abs(s.gram());
  rec.perm_bound = perm_w * perm_abs_s;
  rec.gurvits_bound = std::ldexp(gurvits_capacity(w), n) * perm_abs_s;

  auto require_le = [](double lhs, double rhs, const char* what) {
    if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs)))
      throw invariant_error(std::string("bounds: chain violation at ") + what);
  };
  if (rec.tighter_valid) {
    require_le(rec.probability, rec.tighter, "P <= tighter");
    require_le(rec.tighter, rec.perm_bound, "tighter <= perm_bound");
  } else {
    require_le(rec.probability, rec.perm_bound, "P <= perm_bound");
  }
  require_le(rec.perm_bound, rec.gurvits_bound, "perm_bound <= gurvits_bound");
  return rec;
}

}  // namespace permcoh
