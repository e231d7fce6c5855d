/*
 * Copyright 2026 The egrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// JSON instance files:
//
//   {"schema": 1, "field": "p=3 s=2 mod=2,1,1", "n": 8, "k": 5, "ell": 2, "t": 0,
//    "alpha": [...], "v": [...], "b": 2, "M": [1, 1, 2, 1]}
//
// M is row-major. Integer fields may also be given as decimal strings.

#pragma once

#include "egrl/egrl.hpp"

#include <json.hpp>

#include <string>

namespace egrl {

using Json = nlohmann::ordered_json;

inline Json instance_to_json(const EgrlParams& p) {
    Json j;
    j["schema"] = 1;
    j["field"] = p.field->to_string();
    j["n"] = p.n;
    j["k"] = p.k;
    j["ell"] = p.ell;
    j["t"] = p.t;
    j["alpha"] = p.alpha;
    j["v"] = p.v;
    j["b"] = p.b;
    j["M"] = p.M.data();
    return j;
}

namespace detail {

inline std::uint64_t json_uint(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return std::stoull(s);
    }
    throw Error(Errc::ParseError, std::string("field '") + what + "' is not a nonnegative integer");
}

inline const Json& json_member(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
    return *it;
}

inline std::vector<Code> json_codes(const Json& j, const char* what) {
    if (!j.is_array()) throw Error(Errc::ParseError, std::string("field '") + what + "' is not an array");
    std::vector<Code> out;
    for (const auto& e : j) out.push_back(static_cast<Code>(json_uint(e, what)));
    return out;
}

} // namespace detail

/// Parses and validates an instance document.
inline EgrlParams instance_from_json(const Json& j) {
    using detail::json_member;
    using detail::json_uint;
    if (!j.is_object()) throw Error(Errc::ParseError, "instance is not a JSON object");
    if (auto it = j.find("schema"); it != j.end() && json_uint(*it, "schema") != 1)
        throw Error(Errc::ParseError, "unsupported schema version");
    const Json& fld = json_member(j, "field");
    if (!fld.is_string()) throw Error(Errc::ParseError, "field 'field' is not a string");
    EgrlParams p;
    p.field = parse_field(fld.get<std::string>());
    p.n = json_uint(json_member(j, "n"), "n");
    p.k = json_uint(json_member(j, "k"), "k");
    p.ell = j.contains("ell") ? json_uint(j["ell"], "ell") : 2;
    p.t = j.contains("t") ? json_uint(j["t"], "t") : 0;
    p.alpha = detail::json_codes(json_member(j, "alpha"), "alpha");
    p.v = j.contains("v") ? detail::json_codes(j["v"], "v") : std::vector<Code>(p.n, 1);
    p.b = static_cast<Code>(json_uint(json_member(j, "b"), "b"));
    auto m = detail::json_codes(json_member(j, "M"), "M");
    if (m.size() != p.ell * p.ell)
        throw Error(Errc::DimMismatch, "M has " + std::to_string(m.size()) + " entries, expected ell^2 = " + std::to_string(p.ell * p.ell));
    p.M = Matrix(p.field, p.ell, p.ell, std::move(m));
    p.validate();
    return p;
}

inline EgrlParams instance_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return instance_from_json(j);
}

/// Replaces every JSON number by its decimal string, recursively.
inline Json stringify_numbers(const Json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& e : j) out.push_back(stringify_numbers(e));
        return out;
    }
    if (j.is_object()) {
        Json out = Json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = stringify_numbers(it.value());
        return out;
    }
    return j;
}

} // namespace egrl
