// Copyright 2026 The subentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "subentropy/algebra.hpp"
#include "subentropy/index.hpp"
#include "subentropy/markov.hpp"

namespace subentropy {

using Json = nlohmann::json;

/// Parses text; throws ParseError.
Json parse_json_text(std::string_view text);

/// {"sub": {"blocks": [[n_k, s_k], …]}, "amb": {"blocks": [[m_l, t_l], …]},
///  "inclusion_matrix": [[a_kl, …], …], "normalize": bool}
RawInclusion parse_inclusion(const Json& j);
Json inclusion_to_json(const Inclusion& inc);

/// {"algebra": "sub"|"amb", "blocks": [block, …]} with block a list of rows
/// and entries [re, im] or plain reals.
AlgebraElement parse_state(const Json& j, const Inclusion& inc);
/// Same schema against a single algebra; "algebra" is ignored.
AlgebraElement parse_state(const Json& j, const DirectSumAlgebra& alg);
Json state_to_json(const AlgebraElement& x, std::string_view which);

/// {"type": "schur", "b": …} | {"type": "schur_map", "a": …} |
/// {"type": "superop", "algebra": {"blocks": …}, "matrix": …}.
struct GeneratorInput {
  std::string type;
  std::optional<SchurGenerator> schur;
  std::optional<SchurMap> map;
  std::optional<GeneralGenerator> general;
};
GeneratorInput parse_generator(const Json& j);
Json generator_to_json(const GeneratorInput& g);

Json index_report_to_json(const IndexReport& r, double scale = 1.0);
Json decay_report_to_json(const DecayReport& r, double scale = 1.0);
/// Header t,d1,d2,bound,trace_dist.
std::string decay_report_csv(const DecayReport& r, double scale = 1.0);

/// %.12g text; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);
/// JSON value of v; non-finite values become the strings "inf", "-inf", "nan".
Json json_number(double v);

}  // namespace subentropy
