// Copyright 2026 The entshare Authors
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

#include <string>

#include <nlohmann/json.hpp>

#include "entshare/codes.hpp"

namespace entshare {

/**
 * {"name", "n", "k", "d", "generators", "logical_x", "logical_z"} with
 * Pauli strings in text form. Throws ParseError on a malformed document
 * and ValidationError if the code does not validate.
 */
StabilizerCode code_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const StabilizerCode& code);

StabilizerCode load_code_file(const std::string& path);

}  // namespace entshare
