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

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permcoh/core.hpp"
#include "permcoh/distinguishability.hpp"
#include "permcoh/fock_oracle.hpp"
#include "permcoh/generators.hpp"
#include "permcoh/io.hpp"
#include "permcoh/monotones.hpp"
#include "permcoh/permanent.hpp"
#include "permcoh/pgio.hpp"
#include "permcoh/transition.hpp"

namespace {

using namespace permcoh;

nlohmann::json meta_json(int argc, char** argv, std::optional<std::uint64_t> seed) {
  std::ostringstream cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd << ' ';
    cmd << argv[i];
  }
  nlohmann::json meta = {
      {"version", version_string()},
      {"command_line", cmd.str()},
      {"rng_algorithm", kRngAlgorithm},
  };
  if (seed) meta["seed"] = *seed;
  return meta;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// The beamsplitter instance: two photons on a balanced coupler.
Matrix hom_unitary() {
  Matrix u(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u << Complex(r, 0), Complex(0, r), Complex(0, r), Complex(r, 0);
  return u;
}

/*
 * The worked sparse four-photon overlap matrix: internal states chosen so
 * that exactly the (1,3), (2,4), (3,4) overlaps vanish (1-based), giving
 * six zero entries and ten nonzero ones.
 */
DistinguishabilityMatrix sparse_worked_gram() {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Vector> phi(4, Vector::Zero(3));
  phi[0] << Complex(0), Complex(r, 0), Complex(r, 0);
  phi[1] << Complex(r, 0), Complex(0), Complex(r, 0);
  phi[2] << Complex(1, 0), Complex(0), Complex(0);
  phi[3] << Complex(0), Complex(1, 0), Complex(0);
  return gram_from_states(InternalStateSet(std::move(phi)));
}

struct ProbabilityOptions {
  std::string preset;
  std::string unitary_file;
  int haar_m = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string gram_file;
  std::string states_file;
  double interp = -1.0;
  bool interp_given = false;
  std::vector<int> input;
  std::vector<int> output;
  std::string algo = "ie";
  bool with_bounds = false;
  std::string output_file;
};

int run_probability(const ProbabilityOptions& opt, int argc, char** argv) {
  Matrix u;
  std::optional<DistinguishabilityMatrix> s;
  std::vector<int> input = opt.input;
  std::vector<int> output = opt.output;
  std::optional<std::uint64_t> meta_seed;

  if (!opt.preset.empty()) {
    if (opt.preset == "hom") {
      u = hom_unitary();
      if (input.empty()) input = {1, 1};
      if (output.empty()) output = {1, 1};
      if (opt.interp_given) s = interpolation_family(2, opt.interp);
    } else if (opt.preset == "appendixB" || opt.preset == "sparse4") {
      s = sparse_worked_gram();
      if (input.empty()) input = {1, 1, 1, 1};
      if (output.empty()) output = {1, 1, 1, 1};
      if (!opt.unitary_file.empty()) {
        u = matrix_from_json(load_json_file(opt.unitary_file));
      } else {
        const std::uint64_t seed = opt.seed_given ? opt.seed : 7;
        u = haar_unitary(4, seed);
        meta_seed = seed;
      }
    } else {
      throw validation_error("unknown preset '" + opt.preset + "' (hom, appendixB)");
    }
  }

  if (u.size() == 0) {
    const bool have_file = !opt.unitary_file.empty();
    const bool have_haar = opt.haar_m > 0;
    if (have_file == have_haar)
      throw validation_error("give exactly one of --unitary FILE or --haar M");
    if (have_file) {
      u = matrix_from_json(load_json_file(opt.unitary_file));
    } else {
      if (!opt.seed_given) throw validation_error("--haar needs --seed");
      u = haar_unitary(opt.haar_m, opt.seed);
      meta_seed = opt.seed;
    }
  }
  if (u.rows() != u.cols()) throw validation_error("the network matrix must be square");
  if (!validate_unitary(u, 1e-8)) throw validation_error("the network matrix is not unitary");
  const int m = static_cast<int>(u.rows());

  if (!s) {
    const int sources = (!opt.gram_file.empty()) + (!opt.states_file.empty()) +
                        static_cast<int>(opt.interp_given);
    if (sources != 1)
      throw validation_error("give exactly one of --gram FILE, --states FILE, --interp x");
    if (!opt.gram_file.empty()) {
      s = DistinguishabilityMatrix(matrix_from_json(load_json_file(opt.gram_file)));
    } else if (!opt.states_file.empty()) {
      s = gram_from_states(states_from_json(load_json_file(opt.states_file)));
    }
    // --interp needs the photon number; resolved below once N is known.
  }

  if (input.empty()) {
    const int n_photons = s ? s->size() : 0;
    if (n_photons == 0 || n_photons > m)
      throw validation_error("--input is required (cannot infer the occupation)");
    input.assign(m, 0);
    for (int i = 0; i < n_photons; ++i) input[i] = 1;
  }
  if (output.empty()) output = input;
  const OccupationVector n_vec(input);
  const OccupationVector m_vec(output);
  if (n_vec.modes() != m || m_vec.modes() != m)
    throw validation_error("occupations must have one entry per mode");
  if (n_vec.total() != m_vec.total())
    throw validation_error("input and output occupations must carry the same photon number");
  const int n_photons = n_vec.total();
  if (!n_vec.collision_free())
    throw validation_error("the input occupation must be collision-free");

  if (!s) s = interpolation_family(n_photons, opt.interp);
  if (s->size() != n_photons)
    throw validation_error("S size must equal the photon number");

  const Matrix v = submatrix_for_transition(u, n_vec, m_vec);

  TransitionReport report;
  if (opt.algo == "brute") {
    report = probability_bruteforce(v, *s);
  } else if (opt.algo == "ie") {
    report = probability_inclusion_exclusion(v, *s, 0);
  } else if (opt.algo == "pruned") {
    report = probability_pruned(v, *s, 0);
  } else if (opt.algo == "indist") {
    report = probability_indistinguishable(v);
  } else if (opt.algo == "dist") {
    report = probability_distinguishable(v);
  } else if (opt.algo.rfind("trunc:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(opt.algo.substr(6));
    } catch (const std::exception&) {
      throw validation_error("--algo trunc:k needs an integer k");
    }
    report = probability_truncated(v, *s, k);
  } else {
    throw validation_error("unknown --algo '" + opt.algo +
                           "' (brute, ie, pruned, indist, dist, trunc:k)");
  }
  if (opt.with_bounds) {
    if (opt.algo == "indist" || opt.algo == "dist")
      throw validation_error("--bounds needs an overlap-aware algorithm");
    report.bounds = bounds(v, *s);
  }

  // Repeated output modes overcount by the occupation factorials; rescale
  // so the emitted value is the physical probability.
  double occ_scale = 1.0;
  for (int occ : m_vec.occupations) occ_scale /= factorial_d(occ);
  report.probability *= occ_scale;
  if (report.bounds) {
    report.bounds->probability *= occ_scale;
    report.bounds->tighter *= occ_scale;
    report.bounds->perm_bound *= occ_scale;
    report.bounds->gurvits_bound *= occ_scale;
  }

  nlohmann::json out = {
      {"meta", meta_json(argc, argv, meta_seed)},
      {"report", transition_report_to_json(report)},
  };
  const std::string text = out.dump(2) + "\n";
  if (opt.output_file.empty())
    std::cout << text;
  else
    save_text_file(opt.output_file, text);
  return 0;
}

struct BenchmarkOptions {
  int n = 8;
  std::uint64_t seed = 20260401;
  std::string output_file = "figure2.csv";
};

int run_benchmark(const BenchmarkOptions& opt, int argc, char** argv) {
  if (opt.n < 2 || opt.n > 12)
    throw validation_error("benchmark size must lie in [2, 12]");
  const Matrix u = haar_unitary(opt.n, opt.seed);
  const std::vector<int> occ_one(opt.n, 1);
  const OccupationVector occ(occ_one);
  const Matrix v = submatrix_for_transition(u, occ, occ);

  std::ostringstream csv;
  csv.precision(17);
  csv << "nnz,op_count,measured_multiplies,probability,seed\n";
  int rows = 0;
  for (int nnz : achievable_nonzero_counts(opt.n)) {
    const std::uint64_t row_seed = opt.seed + static_cast<std::uint64_t>(nnz);
    const DistinguishabilityMatrix s = random_gram_with_sparsity(opt.n, nnz, row_seed);
    const TransitionReport r = probability_inclusion_exclusion(v, s, 0);
    csv << nnz << ',' << r.op_count << ',' << r.measured_multiplies << ','
        << r.probability << ',' << row_seed << '\n';
    ++rows;
  }
  save_text_file(opt.output_file, csv.str());

  nlohmann::json out = {
      {"meta", meta_json(argc, argv, opt.seed)},
      {"output", opt.output_file},
      {"rows", rows},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct PgioOptions {
  std::string gram_file;
  std::string action_file;
  std::uint64_t random_action_seed = 0;
  bool random_action_given = false;
  std::string output_file;
};

int run_pgio(const PgioOptions& opt, int argc, char** argv) {
  if (opt.gram_file.empty()) throw validation_error("--gram FILE is required");
  const DistinguishabilityMatrix before(matrix_from_json(load_json_file(opt.gram_file)));

  if (opt.action_file.empty() == !opt.random_action_given)
    throw validation_error("give exactly one of --action FILE or --random-action SEED");
  std::optional<std::uint64_t> meta_seed;
  GramAction action = [&]() {
    if (!opt.action_file.empty()) return gram_action_from_json(load_json_file(opt.action_file));
    meta_seed = opt.random_action_seed;
    return random_gram_action(before.size(), opt.random_action_seed);
  }();
  if (action.sigma.size() != before.size())
    throw validation_error("action size must match the overlap matrix");

  const Matrix after_rho = apply_gram_action(normalize(before).rho(), action);
  const DistinguishabilityMatrix after =
      NormalizedDistinguishability(after_rho).source_gram();
  const MonotoneReport report = monotone_report(before, after);

  nlohmann::json out = {
      {"meta", meta_json(argc, argv, meta_seed)},
      {"monotones", monotone_report_to_json(report)},
      {"any_increase", report.any_increase()},
  };
  const std::string text = out.dump(2) + "\n";
  if (opt.output_file.empty())
    std::cout << text;
  else
    save_text_file(opt.output_file, text);
  if (report.any_increase())
    throw invariant_error("a coherence monotone increased under the action");
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the cross-checking suite.  Each check returns an empty string on
// success or a replay description of the first failing case.

struct VerifyCheck {
  const char* name;
  std::function<std::string()> run;
};

std::string check_rel(double a, double b, double tol, const std::string& label) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a - b) > tol * scale) {
    std::ostringstream msg;
    msg.precision(17);
    msg << label << ": " << a << " vs " << b;
    return msg.str();
  }
  return {};
}

int run_verify(const std::string& scale) {
  const bool full = scale == "full";
  if (!full && scale != "small")
    throw validation_error("--scale must be small or full");

  std::vector<VerifyCheck> checks;

  checks.push_back({"permutation_sum_vs_subset_sum", [full]() -> std::string {
    const int seeds = full ? 25 : 8;
    for (int n = 2; n <= (full ? 6 : 5); ++n) {
      for (int k = 0; k < seeds; ++k) {
        const std::uint64_t seed = 1000 * n + k;
        const Matrix v = haar_unitary(n, seed);
        const DistinguishabilityMatrix s = random_gram(n, seed + 500);
        const double pb = probability_bruteforce(v, s).probability;
        const double pi = probability_inclusion_exclusion(v, s).probability;
        const double pp = probability_pruned(v, s).probability;
        std::ostringstream label;
        label << "N=" << n << " seed=" << seed;
        if (auto e = check_rel(pb, pi, 1e-9, label.str() + " brute/ie"); !e.empty()) return e;
        if (auto e = check_rel(pb, pp, 1e-9, label.str() + " brute/pruned"); !e.empty()) return e;
      }
    }
    return {};
  }});

  checks.push_back({"state_vector_oracle", [full]() -> std::string {
    const int seeds = full ? 10 : 4;
    for (int n = 2; n <= 3; ++n) {
      for (int m = n + 1; m <= 4; ++m) {
        for (int k = 0; k < seeds; ++k) {
          const std::uint64_t seed = 77 * n + 13 * m + k;
          const Matrix u = haar_unitary(m, seed);
          const DistinguishabilityMatrix s = random_gram(n, seed + 31);
          const InternalStateSet states = states_from_gram(s);
          std::vector<int> in(m, 0);
          for (int i = 0; i < n; ++i) in[i] = 1;
          const OccupationVector n_vec(in);
          const auto dist = simulate(u, states, n_vec);
          double total = 0.0;
          for (const auto& [pattern, p] : dist) total += p;
          if (std::abs(total - 1.0) > 1e-9) return "distribution total " + std::to_string(total);
          for (const auto& [pattern, p] : dist) {
            const OccupationVector m_vec(pattern);
            if (!m_vec.collision_free()) continue;
            const Matrix v = submatrix_for_transition(u, n_vec, m_vec);
            const double pi = probability_inclusion_exclusion(v, s).probability;
            std::ostringstream label;
            label << "N=" << n << " M=" << m << " seed=" << seed;
            if (auto e = check_rel(p, pi, 1e-9, label.str()); !e.empty()) return e;
          }
        }
      }
    }
    return {};
  }});

  checks.push_back({"indistinguishable_limit", [full]() -> std::string {
    for (int n = 2; n <= (full ? 8 : 6); ++n) {
      const Matrix v = haar_unitary(n, 900 + n);
      const DistinguishabilityMatrix ones = interpolation_family(n, 1.0);
      const double pi = probability_inclusion_exclusion(v, ones).probability;
      const double pr = probability_indistinguishable(v).probability;
      if (auto e = check_rel(pi, pr, 1e-10, "N=" + std::to_string(n)); !e.empty()) return e;
    }
    return {};
  }});

  checks.push_back({"distinguishable_limit", [full]() -> std::string {
    for (int n = 2; n <= (full ? 8 : 6); ++n) {
      const Matrix v = haar_unitary(n, 1900 + n);
      const DistinguishabilityMatrix ident = interpolation_family(n, 0.0);
      const double pi = probability_inclusion_exclusion(v, ident).probability;
      const double pd = probability_distinguishable(v).probability;
      if (auto e = check_rel(pi, pd, 1e-10, "N=" + std::to_string(n)); !e.empty()) return e;
    }
    return {};
  }});

  checks.push_back({"two_photon_interference", []() -> std::string {
    const Matrix u = hom_unitary();
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const DistinguishabilityMatrix s = interpolation_family(2, x);
      const double p = probability_inclusion_exclusion(u, s).probability;
      const double expected = (1.0 - x * x) / 2.0;
      if (std::abs(p - expected) > 1e-12)
        return "x=" + std::to_string(x) + " got " + std::to_string(p);
    }
    return {};
  }});

  checks.push_back({"bound_chain", [full]() -> std::string {
    const int cases = full ? 100 : 30;
    for (int k = 0; k < cases; ++k) {
      const int n = 2 + k % 4;
      const std::uint64_t seed = 4000 + k;
      const Matrix v = haar_unitary(n, seed);
      const DistinguishabilityMatrix s = random_gram(n, seed + 17);
      bounds(v, s);  // throws on a chain violation
    }
    for (int n = 2; n <= 8; ++n) {
      const Matrix v = haar_unitary(n, 4200 + n);
      const Matrix w = v.cwiseProduct(v.conjugate());
      const double f = gurvits_capacity(w);
      const double p = permanent_ryser(w).real();
      if (p < f - 1e-9 || p > std::ldexp(f, n) + 1e-9)
        return "capacity sandwich failed at N=" + std::to_string(n);
    }
    return {};
  }});

  checks.push_back({"sparse_skip_instance", []() -> std::string {
    const DistinguishabilityMatrix s = sparse_worked_gram();
    const Matrix v = haar_unitary(4, 7);
    const TransitionReport pr = probability_pruned(v, s);
    const TransitionReport ie = probability_inclusion_exclusion(v, s);
    if (auto e = check_rel(pr.probability, ie.probability, 1e-12, "pruned/ie"); !e.empty())
      return e;
    const PrunedDetail& d = *pr.pruned;
    if (d.baseline_bookkeeping != 2048 || d.pruned_bookkeeping != 2024 ||
        d.skipped_bookkeeping != 24)
      return "bookkeeping " + std::to_string(d.baseline_bookkeeping) + "/" +
             std::to_string(d.pruned_bookkeeping) + "/" + std::to_string(d.skipped_bookkeeping);
    if (d.vanishing_pair_count != 10)
      return "vanishing pair count " + std::to_string(d.vanishing_pair_count);
    if (d.maximal_pairs.size() != 4)
      return "maximal pair count " + std::to_string(d.maximal_pairs.size());
    return {};
  }});

  checks.push_back({"phase_invariance", [full]() -> std::string {
    const int n = full ? 6 : 4;
    const Matrix v = haar_unitary(n, 31415);
    std::optional<double> first;
    std::mt19937_64 rng(2718);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> thetas(n);
      for (double& t : thetas)
        t = 2.0 * M_PI * static_cast<double>(rng()) / static_cast<double>(UINT64_MAX);
      const DistinguishabilityMatrix s = maximally_coherent(n, thetas).source_gram();
      const double p = probability_inclusion_exclusion(v, s).probability;
      if (!first) first = p;
      if (auto e = check_rel(p, *first, 1e-10, "phase vector " + std::to_string(k)); !e.empty())
        return e;
    }
    return {};
  }});

  checks.push_back({"action_monotones", [full]() -> std::string {
    const int cases = full ? 1000 : 150;
    for (int k = 0; k < cases; ++k) {
      const int n = 2 + k % 5;
      const std::uint64_t seed = 5000 + k;
      const DistinguishabilityMatrix before = random_gram(n, seed);
      const GramAction act = random_gram_action(n, seed + 1);
      const Matrix after_rho = apply_gram_action(normalize(before).rho(), act);
      const DistinguishabilityMatrix after =
          NormalizedDistinguishability(after_rho).source_gram();
      const MonotoneReport rep = monotone_report(before, after);
      if (rep.any_increase()) {
        std::ostringstream msg;
        msg << "monotone increased, N=" << n << " seed=" << seed;
        for (const auto& e : rep.entries)
          if (!e.decreased) msg << " [" << e.name << " " << e.before << " -> " << e.after << "]";
        return msg.str();
      }
    }
    return {};
  }});

  checks.push_back({"coherent_reachability", [full]() -> std::string {
    const int cases = full ? 100 : 30;
    for (int k = 0; k < cases; ++k) {
      const int n = 2 + k % 5;
      const DistinguishabilityMatrix target_s = random_gram(n, 6000 + k);
      const NormalizedDistinguishability target = normalize(target_s);
      const GramAction act = channel_to_target(target);
      const Matrix start = maximally_coherent(n, std::vector<double>(n, 0.0)).rho();
      const Matrix produced = apply_gram_action(start, act);
      if ((produced - target.rho()).cwiseAbs().maxCoeff() > 1e-12)
        return "target not reproduced, N=" + std::to_string(n) +
               " seed=" + std::to_string(6000 + k);
    }
    return {};
  }});

  checks.push_back({"grouped_term_consistency", [full]() -> std::string {
    const int seeds = full ? 10 : 4;
    for (int n = 2; n <= 5; ++n) {
      for (int k = 0; k < seeds; ++k) {
        const std::uint64_t seed = 7000 + 10 * n + k;
        const Matrix v = haar_unitary(n, seed);
        const DistinguishabilityMatrix s = random_gram(n, seed + 3);
        const double p = probability_bruteforce(v, s).probability;
        const auto terms = z_decomposition(v, s);
        Complex sum = 0.0;
        for (const auto& [a, z] : terms) sum += z;
        if (auto e = check_rel(sum.real(), p, 1e-10, "grouped sum"); !e.empty()) return e;
        for (int kk = 0; kk <= n; kk = (kk == 0 ? 2 : kk + 1)) {
          const TransitionReport t = probability_truncated(v, s, kk);
          if (std::abs(t.probability - p) > t.residual_abs_sum + 1e-12)
            return "residual bound violated at k=" + std::to_string(kk);
          if (t.x_estimate < 0.0 || t.x_estimate > 1.0 + 1e-9)
            return "x estimate out of range at k=" + std::to_string(kk);
        }
      }
    }
    return {};
  }});

  checks.push_back({"classifier_suite", [full]() -> std::string {
    const int seeds = full ? 40 : 10;
    const KrausSuiteCase cases[] = {KrausSuiteCase::Gio, KrausSuiteCase::PgioNotGio,
                                    KrausSuiteCase::SioNotFio, KrausSuiteCase::FioNotSio,
                                    KrausSuiteCase::IoOnly};
    for (KrausSuiteCase c : cases) {
      for (int k = 0; k < seeds; ++k) {
        const int d = 2 + k % 3;
        const KrausSet ks = structured_kraus_set(c, d, 8000 + k);
        if (classify(ks) != expected_classes(c)) {
          std::ostringstream msg;
          msg << "misclassified case " << static_cast<int>(c) << " d=" << d
              << " seed=" << 8000 + k;
          return msg.str();
        }
      }
    }
    return {};
  }});

  checks.push_back({"channel_round_trip", [full]() -> std::string {
    const int cases = full ? 50 : 15;
    for (int k = 0; k < cases; ++k) {
      const int d = 2 + k % 4;
      const PgioChannel ch = random_pgio_channel(d, 3, 9000 + k);
      const KrausSet ks = ch.to_kraus();
      if (classify(ks).count(OpClass::PGIO) == 0)
        return "canonical channel not classified PGIO, seed=" + std::to_string(9000 + k);
      const DistinguishabilityMatrix s = random_gram(d, 9100 + k);
      const Matrix rho = normalize(s).rho();
      Matrix via_kraus = Matrix::Zero(d, d);
      for (const Matrix& op : ks.operators) via_kraus += op * rho * op.adjoint();
      const Matrix via_action = apply_gram_action(rho, kraus_to_gram_action(ch));
      if ((via_kraus - via_action).cwiseAbs().maxCoeff() > 1e-12)
        return "kraus and gram action disagree, seed=" + std::to_string(9000 + k);
    }
    return {};
  }});

  checks.push_back({"overlap_product_extension", [full]() -> std::string {
    const int cases = full ? 50 : 15;
    for (int k = 0; k < cases; ++k) {
      const int n = 2 + k % 5;
      const DistinguishabilityMatrix s = random_gram(n, 9500 + k);
      const DistinguishabilityMatrix extra = random_gram(n, 9600 + k);
      const DistinguishabilityMatrix ext = hadamard_extend(s, extra);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (std::abs(ext(i, j)) > std::abs(s(i, j)) + 1e-12)
            return "extension grew an overlap, seed=" + std::to_string(9500 + k);
      if (nonzero_count(ext.gram()) > nonzero_count(s.gram()))
        return "extension grew the support, seed=" + std::to_string(9500 + k);
    }
    return {};
  }});

  checks.push_back({"monotone_spot_values", []() -> std::string {
    for (int n = 2; n <= 6; ++n) {
      const double x = 0.6;
      const DistinguishabilityMatrix s = interpolation_family(n, x);
      if (std::abs(j_sigma(s.gram(), Permutation::identity(n)) - 1.0) > 1e-12)
        return "identity J at N=" + std::to_string(n);
      for (int a = 2; a <= n; ++a) {
        const JaResult r = j_a(s, a);
        if (std::abs(r.value - std::pow(x, a)) > 1e-12)
          return "J_a value at N=" + std::to_string(n) + " a=" + std::to_string(a);
        if (r.sigma.size() - r.sigma.fixed_points() != a)
          return "J_a witness class at N=" + std::to_string(n) + " a=" + std::to_string(a);
      }
      if (nonzero_count(s.gram()) != n * n) return "dense nonzero count";
      if (offdiagonal_count(s.gram()) != n * n - n) return "dense offdiagonal count";
      if (std::abs(permanent_abs(interpolation_family(n, 0.0).gram()) - 1.0) > 1e-12)
        return "identity permanent";
    }
    return {};
  }});

  bool all_ok = true;
  for (const VerifyCheck& check : checks) {
    const std::string failure = check.run();
    if (failure.empty()) {
      std::cout << "[ ok ] " << check.name << "\n";
    } else {
      all_ok = false;
      std::cout << "[FAIL] " << check.name << "\n";
      nlohmann::json replay = {{"check", check.name}, {"detail", failure}};
      std::cerr << replay.dump(2) << "\n";
      break;
    }
  }
  if (!all_ok) throw invariant_error("verification suite failed");
  std::cout << "all checks passed (" << checks.size() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial-distinguishability boson sampling toolkit"};
  app.require_subcommand(1);

  ProbabilityOptions prob;
  CLI::App* cmd_prob = app.add_subcommand(
      "probability", "transition probability for one instance (JSON report)");
  cmd_prob->add_option("--preset", prob.preset, "named instance: hom, appendixB");
  cmd_prob->add_option("--unitary", prob.unitary_file, "network matrix JSON file");
  cmd_prob->add_option("--haar", prob.haar_m, "draw an MxM Haar network (needs --seed)");
  cmd_prob->add_option("--seed", prob.seed, "seed for --haar")
      ->each([&prob](const std::string&) { prob.seed_given = true; });
  cmd_prob->add_option("--gram", prob.gram_file, "overlap matrix JSON file");
  cmd_prob->add_option("--states", prob.states_file, "internal state list JSON file");
  cmd_prob->add_option("--interp", prob.interp, "uniform pairwise overlap x in [0,1]")
      ->each([&prob](const std::string&) { prob.interp_given = true; });
  cmd_prob->add_option("--input", prob.input, "input occupation, e.g. 1,1,0")->delimiter(',');
  cmd_prob->add_option("--output", prob.output, "output occupation (default: input)")
      ->delimiter(',');
  cmd_prob->add_option("--algo", prob.algo, "brute, ie, pruned, indist, dist, trunc:k");
  cmd_prob->add_flag("--bounds", prob.with_bounds, "attach the upper-bound chain");
  cmd_prob->add_option("--out", prob.output_file, "write the JSON here instead of stdout");

  BenchmarkOptions bench;
  CLI::App* cmd_bench = app.add_subcommand(
      "benchmark", "operation-count sweep over overlap sparsity (CSV)");
  cmd_bench->add_option("--n", bench.n, "photon number (2..12, default 8)");
  cmd_bench->add_option("--seed", bench.seed, "base seed for the network and overlaps");
  cmd_bench->add_option("--output", bench.output_file, "CSV path (default figure2.csv)");

  PgioOptions pg;
  CLI::App* cmd_pg = app.add_subcommand(
      "pgio", "apply an incoherent action and report the coherence monotones");
  cmd_pg->add_option("--gram", pg.gram_file, "overlap matrix JSON file")->required();
  cmd_pg->add_option("--action", pg.action_file, "GramAction JSON file");
  cmd_pg->add_option("--random-action", pg.random_action_seed, "draw the action from a seed")
      ->each([&pg](const std::string&) { pg.random_action_given = true; });
  cmd_pg->add_option("--out", pg.output_file, "write the JSON here instead of stdout");

  std::string verify_scale = "small";
  CLI::App* cmd_ver = app.add_subcommand("verify", "run the cross-checking suite");
  cmd_ver->add_option("--scale", verify_scale, "small (default) or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_prob->parsed()) return run_probability(prob, argc, argv);
    if (cmd_bench->parsed()) return run_benchmark(bench, argc, argv);
    if (cmd_pg->parsed()) return run_pgio(pg, argc, argv);
    if (cmd_ver->parsed()) return run_verify(verify_scale);
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
