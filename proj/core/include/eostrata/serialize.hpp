/*
 * Copyright 2026 The eostrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// JSON and CSV forms of the library's values.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eostrata/bedard.hpp"
#include "eostrata/dieudonne.hpp"
#include "eostrata/dlclassify.hpp"
#include "eostrata/gf.hpp"
#include "eostrata/symplectic.hpp"
#include "eostrata/weyl.hpp"

namespace eostrata::serialize {

using nlohmann::json;

json to_json(const weyl::WeylElement& w);  // one-line array
json to_json(const weyl::ParabolicType& t);  // sorted generator indices
std::string word_string(const weyl::WeylElement& w);  // "s2s1", "e"
std::string one_line_string(const weyl::WeylElement& w);  // "3 1 4 2"

json element_json(const gf::Field& f, gf::Elem a);  // coefficient tuple, constant first
json field_json(const gf::Field& f);
json to_json(const linalg::Matrix& m);
json to_json(const symplectic::Subspace& u);

// One row per w in ^IW_c. With g, each row also carries the lift to W_g.
json stratum_table(int c, std::optional<int> g = std::nullopt);
// Every sequence for the Siegel type of rank c and trivial Frobenius.
json bedard_dump(int c);

json module_json(const dieudonne::DieudonneModule& m);
json eo_type_json(const dieudonne::EOType& t);

inline constexpr const char* kCensusCsvHeader = "p,m,c,label_word,label_oneline,count";
std::string census_csv(const std::vector<dlclassify::CensusRecord>& records);
json census_json(const std::vector<dlclassify::CensusRecord>& records);

// {tool, version, command, config, fields}
json header(const std::string& command, const json& config, const std::vector<gf::FieldPtr>& fields);

}  // namespace eostrata::serialize
