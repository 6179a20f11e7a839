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

#ifndef PERMCOH_IO_HPP
#define PERMCOH_IO_HPP

#include <string>

#include <json.hpp>

#include "permcoh/common.hpp"
#include "permcoh/distinguishability.hpp"
#include "permcoh/monotones.hpp"
#include "permcoh/pgio.hpp"
#include "permcoh/transition.hpp"

namespace permcoh {

/*
 * Matrix wire format:
 *   {"rows": R, "cols": C, "data": [[[re, im], ...], ...]}
 * data is R rows of C entries; an entry is either [re, im] or a bare
 * number (imaginary part zero).
 */
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// {"sigma": [..], "A": <matrix>}
nlohmann::json gram_action_to_json(const GramAction& act);
GramAction gram_action_from_json(const nlohmann::json& j);

/// {"sigma": [..], "coeffs": [[entry, ...], ...]}, one row per Kraus index.
nlohmann::json pgio_channel_to_json(const PgioChannel& ch);
PgioChannel pgio_channel_from_json(const nlohmann::json& j);

/// A list of state vectors, each a list of entries ([re, im] or number).
InternalStateSet states_from_json(const nlohmann::json& j);

nlohmann::json transition_report_to_json(const TransitionReport& r);

/// Metric names at the top level, each {"before": .., "after": ..,
/// "decreased": ..}.
nlohmann::json monotone_report_to_json(const MonotoneReport& r);

/// Parses a file as JSON; io_error if unreadable, validation_error if not
/// valid JSON.
nlohmann::json load_json_file(const std::string& path);

void save_text_file(const std::string& path, const std::string& content);

}  // namespace permcoh

#endif  // PERMCOH_IO_HPP
