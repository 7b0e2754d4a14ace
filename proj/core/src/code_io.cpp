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

#include "entshare/code_io.hpp"

#include <fstream>

#include "entshare/error.hpp"

namespace entshare {
namespace {

std::vector<PauliString> pauli_list(const nlohmann::json& j, const char* key) {
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  std::vector<PauliString> out;
  for (const auto& item : arr) out.push_back(PauliString::parse(item.get<std::string>()));
  return out;
}

nlohmann::json string_list(const std::vector<PauliString>& ops) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : ops) arr.push_back(p.to_string());
  return arr;
}

}  // namespace

StabilizerCode code_from_json(const nlohmann::json& j) {
  StabilizerCode code;
  try {
    if (!j.is_object()) throw ParseError("code definition must be a JSON object");
    code.name = j.at("name").get<std::string>();
    code.n = j.at("n").get<int>();
    code.k = j.at("k").get<int>();
    code.d = j.at("d").get<int>();
    code.generators = pauli_list(j, "generators");
    code.logical_x = pauli_list(j, "logical_x");
    code.logical_z = pauli_list(j, "logical_z");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("code definition: ") + e.what());
  }
  const ValidationReport report = validate(code);
  if (!report.ok()) throw ValidationError("code '" + code.name + "': " + report.summary());
  return code;
}

nlohmann::json code_to_json(const StabilizerCode& code) {
  return nlohmann::json{{"name", code.name},
                        {"n", code.n},
                        {"k", code.k},
                        {"d", code.d},
                        {"generators", string_list(code.generators)},
                        {"logical_x", string_list(code.logical_x)},
                        {"logical_z", string_list(code.logical_z)}};
}

StabilizerCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return code_from_json(j);
}

}  // namespace entshare
