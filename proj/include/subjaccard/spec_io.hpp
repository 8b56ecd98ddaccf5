// Copyright 2026 The Authors.
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

#include <json.hpp>

#include "subjaccard/limits.hpp"
#include "subjaccard/report.hpp"
#include "subjaccard/set_function.hpp"

namespace subjaccard {

// JSON function-spec documents. The parser is strict: the document must be
// an object with exactly the keys its "family" requires, exact numbers may
// be JSON integers or canonical "p/q" / decimal strings (JSON floats are
// rejected outside joint-entropy tables), and every structural problem is
// a ParseError or MalformedSpec. `epsilon` is only consulted by families
// with approximate validation (the joint-entropy table sum).
SetFunctionSpec parse_spec(const nlohmann::json& doc,
                           double epsilon = caps::kDefaultEpsilon);
SetFunctionSpec parse_spec_text(const std::string& text,
                                double epsilon = caps::kDefaultEpsilon);
SetFunctionSpec load_spec_file(const std::string& path,
                               double epsilon = caps::kDefaultEpsilon);

// Canonical serialization: keys sorted, exact numbers rendered as reduced
// "p/q"/integer strings, subsets encoded as comma-joined labels in
// ground-set order with "-" for the empty set. parse(serialize(s)) is s,
// and serialize(parse(doc)) is a fixed point for every accepted doc.
// Approximate explicit tables have no file form (MalformedSpec).
nlohmann::json serialize_spec(const SetFunctionSpec& spec);
std::string canonical_spec_text(const SetFunctionSpec& spec);

// "fnv1a64:" + 16 hex digits of the FNV-1a 64 hash of the canonical text.
std::string spec_digest(const SetFunctionSpec& spec);

// Report rendering. Exact values become canonical strings, approximate
// values JSON numbers; witnesses use the subset text encoding. The seed
// field appears only for sampled reports and the zero-distance block only
// when such pairs were found.
nlohmann::json violation_to_json(const ViolationRecord& record);
nlohmann::json report_to_json(const PropertyReport& report);

// Exact number from a JSON node (integer or string forms).
Rational parse_exact_number(const nlohmann::json& node,
                            const std::string& what);
nlohmann::json value_to_json(const Value& v);

}  // namespace subjaccard
