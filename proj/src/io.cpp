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

#include "permcoh/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace permcoh {

namespace {

Complex entry_from_json(const nlohmann::json& e) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw validation_error("matrix entry must be a number or an [re, im] pair");
}

nlohmann::json entry_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

std::vector<int> int_list_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw validation_error(std::string(what) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw validation_error("matrix JSON needs rows, cols, and data");
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw validation_error("matrix dimensions must be positive");
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows)
    throw validation_error("matrix data must have exactly 'rows' rows");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw validation_error("matrix row has the wrong length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  ensure_finite(m);
  return m;
}

nlohmann::json gram_action_to_json(const GramAction& act) {
  return {{"sigma", act.sigma.image()}, {"A", matrix_to_json(act.A)}};
}

GramAction gram_action_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sigma") || !j.contains("A"))
    throw validation_error("gram action JSON needs sigma and A");
  return GramAction(matrix_from_json(j["A"]),
                    Permutation(int_list_from_json(j["sigma"], "sigma")));
}

nlohmann::json pgio_channel_to_json(const PgioChannel& ch) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Vector& row : ch.coefficients) {
    nlohmann::json r = nlohmann::json::array();
    for (Eigen::Index i = 0; i < row.size(); ++i) r.push_back(entry_to_json(row(i)));
    coeffs.push_back(std::move(r));
  }
  return {{"sigma", ch.sigma.image()}, {"coeffs", std::move(coeffs)}};
}

PgioChannel pgio_channel_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sigma") || !j.contains("coeffs"))
    throw validation_error("channel JSON needs sigma and coeffs");
  Permutation sigma(int_list_from_json(j["sigma"], "sigma"));
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array() || coeffs.empty())
    throw validation_error("coeffs must be a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : coeffs) {
    if (!r.is_array() || static_cast<int>(r.size()) != sigma.size())
      throw validation_error("each coeffs row must match the sigma length");
    Vector v(sigma.size());
    for (int i = 0; i < sigma.size(); ++i) v(i) = entry_from_json(r[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(v));
  }
  return PgioChannel(std::move(sigma), std::move(rows));
}

InternalStateSet states_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw validation_error("states JSON must be a nonempty array of vectors");
  std::vector<Vector> states;
  for (const auto& s : j) {
    if (!s.is_array() || s.empty())
      throw validation_error("each state must be a nonempty array of entries");
    Vector v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = entry_from_json(s[i]);
    states.push_back(std::move(v));
  }
  return InternalStateSet(std::move(states));
}

nlohmann::json transition_report_to_json(const TransitionReport& r) {
  nlohmann::json j = {
      {"probability", r.probability},
      {"algorithm", algorithm_name(r.algorithm)},
      {"op_count", r.op_count},
      {"measured_multiplies", r.measured_multiplies},
  };
  if (r.bounds) {
    nlohmann::json b = {
        {"perm_bound", r.bounds->perm_bound},
        {"gurvits_bound", r.bounds->gurvits_bound},
        {"probability", r.bounds->probability},
    };
    if (r.bounds->tighter_valid) b["tighter"] = r.bounds->tighter;
    j["bounds"] = std::move(b);
  }
  if (r.algorithm == Algorithm::TruncatedK) {
    j["truncation_k"] = r.truncation_k;
    j["residual_abs_sum"] = r.residual_abs_sum;
    j["x_estimate"] = r.x_estimate;
  }
  if (r.pruned) {
    auto pairs = [](const std::vector<VanishingPair>& ps) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& p : ps) out.push_back({{"rows", p.rows}, {"cols", p.cols}});
      return out;
    };
    j["pruned"] = {
        {"baseline_bookkeeping", r.pruned->baseline_bookkeeping},
        {"skipped_bookkeeping", r.pruned->skipped_bookkeeping},
        {"pruned_bookkeeping", r.pruned->pruned_bookkeeping},
        {"skipped_nontrivial", r.pruned->skipped_nontrivial},
        {"skipped_total", r.pruned->skipped_total},
        {"vanishing_pair_count", r.pruned->vanishing_pair_count},
        {"vanishing_pairs", pairs(r.pruned->vanishing_pairs)},
        {"maximal_pairs", pairs(r.pruned->maximal_pairs)},
    };
  }
  return j;
}

nlohmann::json monotone_report_to_json(const MonotoneReport& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const MonotoneEntry& e : r.entries) {
    j[e.name] = {{"before", e.before}, {"after", e.after}, {"decreased", e.decreased}};
  }
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("cannot read " + path);
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw validation_error(path + " is not valid JSON");
  return j;
}

void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("failed writing " + path);
}

}  // namespace permcoh
