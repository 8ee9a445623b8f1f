// Copyright 2026 the auvplan authors
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
//
// Minimal JSON Schema checker covering the subset the published schemas use:
// type (incl. type arrays), required, properties, items, enum, minimum,
// maximum, exclusiveMinimum. Returns the first violation as a path string.

#ifndef AUVPLAN_TESTS_SCHEMA_CHECK_HPP_
#define AUVPLAN_TESTS_SCHEMA_CHECK_HPP_

#include <json.hpp>
#include <string>

namespace schema_check
{

using nlohmann::json;

inline bool matches_type(const json & value, const std::string & type)
{
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline std::string validate(const json & value, const json & schema, const std::string & path)
{
  if (schema.contains("type")) {
    const json & type = schema.at("type");
    bool ok = false;
    if (type.is_array()) {
      for (const auto & t : type) ok = ok || matches_type(value, t.get<std::string>());
    } else {
      ok = matches_type(value, type.get<std::string>());
    }
    if (!ok) return path + ": type mismatch";
  }
  if (value.is_null()) return "";  // nullable fields skip the object checks

  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto & candidate : schema.at("enum")) ok = ok || candidate == value;
    if (!ok) return path + ": not in enum";
  }
  if (value.is_number()) {
    const double x = value.get<double>();
    if (schema.contains("minimum") && x < schema.at("minimum").get<double>()) {
      return path + ": below minimum";
    }
    if (schema.contains("maximum") && x > schema.at("maximum").get<double>()) {
      return path + ": above maximum";
    }
    if (schema.contains("exclusiveMinimum") && x <= schema.at("exclusiveMinimum").get<double>()) {
      return path + ": not above exclusiveMinimum";
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto & key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          return path + ": missing required key '" + key.get<std::string>() + "'";
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto & [key, sub] : schema.at("properties").items()) {
        if (value.contains(key)) {
          const std::string error = validate(value.at(key), sub, path + "/" + key);
          if (!error.empty()) return error;
        }
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string error =
        validate(value[i], schema.at("items"), path + "[" + std::to_string(i) + "]");
      if (!error.empty()) return error;
    }
  }
  return "";
}

}  // namespace schema_check

#endif  // AUVPLAN_TESTS_SCHEMA_CHECK_HPP_
