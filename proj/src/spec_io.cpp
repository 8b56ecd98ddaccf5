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

#include "subjaccard/spec_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "subjaccard/errors.hpp"
#include "subjaccard/verify.hpp"

namespace subjaccard {

namespace {

using nlohmann::json;

// Document shape helpers ----------------------------------------------------

void require_object_keys(const json& doc,
                         const std::vector<std::string>& keys) {
  if (!doc.is_object()) throw ParseError("function spec must be a JSON object");
  for (const std::string& key : keys) {
    if (!doc.contains(key)) {
      throw ParseError("function spec is missing key '" + key + "'");
    }
  }
  for (const auto& [key, unused] : doc.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError("function spec has unexpected key '" + key + "'");
    }
  }
}

GroundSetPtr parse_ground(const json& doc) {
  const json& node = doc.at("ground");
  if (!node.is_array()) throw ParseError("'ground' must be an array of labels");
  std::vector<std::string> labels;
  labels.reserve(node.size());
  for (const json& item : node) {
    if (!item.is_string()) {
      throw ParseError("'ground' must be an array of labels");
    }
    labels.push_back(item.get<std::string>());
  }
  return GroundSet::create(std::move(labels));
}

std::uint64_t parse_count(const json& node, const std::string& what) {
  if (node.is_number_unsigned()) return node.get<std::uint64_t>();
  if (node.is_number_integer()) {
    auto v = node.get<std::int64_t>();
    if (v < 0) throw ParseError("'" + what + "' must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }
  throw ParseError("'" + what + "' must be a nonnegative integer");
}

// One weight per ground label, keyed by label.
std::vector<Rational> parse_weights(const json& doc,
                                    const GroundSetPtr& ground) {
  const json& node = doc.at("weights");
  if (!node.is_object()) {
    throw ParseError("'weights' must be an object keyed by label");
  }
  for (const auto& [key, unused] : node.items()) {
    if (!ground->contains(key)) {
      throw ParseError("'weights' references unknown label '" + key + "'");
    }
  }
  std::vector<Rational> weights;
  weights.reserve(static_cast<std::size_t>(ground->size()));
  for (const std::string& label : ground->labels()) {
    if (!node.contains(label)) {
      throw ParseError("'weights' is missing label '" + label + "'");
    }
    weights.push_back(parse_exact_number(node.at(label),
                                         "weights['" + label + "']"));
  }
  return weights;
}

SetFunctionSpec parse_bipartite(const json& doc, GroundSetPtr ground) {
  const json& labels_node = doc.at("right_labels");
  if (!labels_node.is_array()) {
    throw ParseError("'right_labels' must be an array of labels");
  }
  std::vector<std::string> right_labels;
  for (const json& item : labels_node) {
    if (!item.is_string()) {
      throw ParseError("'right_labels' must be an array of labels");
    }
    right_labels.push_back(item.get<std::string>());
  }

  const json& edges_node = doc.at("edges");
  if (!edges_node.is_array()) {
    throw ParseError("'edges' must be an array of [left, right] pairs");
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const json& item : edges_node) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_string()) {
      throw ParseError("'edges' must be an array of [left, right] pairs");
    }
    edges.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }

  try {
    return SetFunctionSpec::bipartite_neighborhood(
        std::move(ground), std::move(right_labels), edges);
  } catch (const UnknownLabel& e) {
    throw ParseError("'edges' references unknown label '" + e.label() + "'");
  }
}

SetFunctionSpec parse_partition(const json& doc, GroundSetPtr ground) {
  const json& blocks_node = doc.at("partitions");
  if (!blocks_node.is_array()) {
    throw ParseError("'partitions' must be an array of label arrays");
  }
  std::vector<std::vector<std::string>> blocks;
  for (const json& block : blocks_node) {
    if (!block.is_array()) {
      throw ParseError("'partitions' must be an array of label arrays");
    }
    std::vector<std::string> labels;
    for (const json& item : block) {
      if (!item.is_string()) {
        throw ParseError("'partitions' must be an array of label arrays");
      }
      labels.push_back(item.get<std::string>());
    }
    blocks.push_back(std::move(labels));
  }

  const json& caps_node = doc.at("capacities");
  if (!caps_node.is_array()) {
    throw ParseError("'capacities' must be an array of nonnegative integers");
  }
  std::vector<std::uint64_t> capacities;
  for (const json& item : caps_node) {
    capacities.push_back(parse_count(item, "capacities"));
  }

  try {
    return SetFunctionSpec::partition_matroid_rank(std::move(ground), blocks,
                                                   std::move(capacities));
  } catch (const UnknownLabel& e) {
    throw ParseError("'partitions' references unknown label '" + e.label() +
                     "'");
  }
}

SetFunctionSpec parse_joint_entropy(const json& doc, GroundSetPtr ground,
                                    double epsilon) {
  const json& vars_node = doc.at("variables");
  if (!vars_node.is_array()) {
    throw ParseError("'variables' must be an array of labels");
  }
  std::vector<std::string> variables;
  for (const json& item : vars_node) {
    if (!item.is_string()) {
      throw ParseError("'variables' must be an array of labels");
    }
    variables.push_back(item.get<std::string>());
  }
  if (variables != ground->labels()) {
    throw ParseError("'variables' must list the ground labels in order");
  }

  const json& cards_node = doc.at("cardinalities");
  if (!cards_node.is_array()) {
    throw ParseError("'cardinalities' must be an array of integers >= 1");
  }
  std::vector<std::uint64_t> cardinalities;
  for (const json& item : cards_node) {
    cardinalities.push_back(parse_count(item, "cardinalities"));
  }

  const json& table_node = doc.at("table");
  if (!table_node.is_array()) {
    throw ParseError("'table' must be an array of probabilities");
  }
  std::vector<double> table;
  table.reserve(table_node.size());
  for (const json& item : table_node) {
    if (!item.is_number()) {
      throw ParseError("'table' must be an array of probabilities");
    }
    table.push_back(item.get<double>());
  }

  return SetFunctionSpec::joint_entropy(std::move(ground),
                                        std::move(cardinalities),
                                        std::move(table), epsilon);
}

SetFunctionSpec parse_explicit_table(const json& doc, GroundSetPtr ground) {
  const json& node = doc.at("values");
  if (!node.is_object()) {
    throw ParseError("'values' must be an object keyed by subset encodings");
  }
  const std::uint64_t expected = std::uint64_t{1} << ground->size();
  if (node.size() != expected) {
    throw ParseError("'values' needs exactly " + std::to_string(expected) +
                     " entries, got " + std::to_string(node.size()));
  }
  std::vector<Value> values(static_cast<std::size_t>(expected));
  std::vector<bool> seen(static_cast<std::size_t>(expected), false);
  for (const auto& [key, entry] : node.items()) {
    std::uint64_t mask;
    try {
      mask = SubsetMask::parse(ground, key).bits();
    } catch (const UnknownLabel& e) {
      throw ParseError("'values' key '" + key + "' references unknown label '" +
                       e.label() + "'");
    }
    if (seen[mask]) {
      throw ParseError("'values' encodes the same subset twice: '" + key +
                       "'");
    }
    seen[mask] = true;
    values[mask] =
        Value::exact(parse_exact_number(entry, "values['" + key + "']"));
  }
  return SetFunctionSpec::explicit_table(std::move(ground), std::move(values));
}

// Serialization helpers ------------------------------------------------------

json weights_to_json(const GroundSetPtr& ground,
                     const std::vector<Rational>& weights) {
  json node = json::object();
  for (int i = 0; i < ground->size(); ++i) {
    node[ground->label(i)] =
        rational_to_string(weights[static_cast<std::size_t>(i)]);
  }
  return node;
}

}  // namespace

Rational parse_exact_number(const json& node, const std::string& what) {
  if (node.is_number_unsigned()) {
    // May exceed the signed-64 range; go through the string form.
    return rational_from_string(std::to_string(node.get<std::uint64_t>()));
  }
  if (node.is_number_integer()) {
    return Rational(static_cast<long>(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    try {
      return rational_from_string(node.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  if (node.is_number_float()) {
    throw ParseError(what +
                     ": floating-point literals are not exact; use a decimal "
                     "or \"p/q\" string");
  }
  throw ParseError(what + ": expected an integer or a number string");
}

json value_to_json(const Value& v) {
  if (v.is_exact()) return rational_to_string(v.rat());
  return v.num();
}

SetFunctionSpec parse_spec(const json& doc, double epsilon) {
  if (!doc.is_object() || !doc.contains("family") ||
      !doc.at("family").is_string()) {
    throw ParseError("function spec needs a string 'family' key");
  }
  Family family = family_from_name(doc.at("family").get<std::string>());

  switch (family) {
    case Family::cardinality:
      require_object_keys(doc, {"family", "ground"});
      return SetFunctionSpec::cardinality(parse_ground(doc));

    case Family::weighted_modular: {
      require_object_keys(doc, {"family", "ground", "gamma", "weights"});
      GroundSetPtr ground = parse_ground(doc);
      Rational gamma = parse_exact_number(doc.at("gamma"), "gamma");
      std::vector<Rational> weights = parse_weights(doc, ground);
      return SetFunctionSpec::weighted_modular(std::move(ground),
                                               std::move(gamma),
                                               std::move(weights));
    }

    case Family::budgeted_linear: {
      require_object_keys(doc, {"family", "ground", "budget", "weights"});
      GroundSetPtr ground = parse_ground(doc);
      Rational budget = parse_exact_number(doc.at("budget"), "budget");
      std::vector<Rational> weights = parse_weights(doc, ground);
      return SetFunctionSpec::budgeted_linear(std::move(ground),
                                              std::move(budget),
                                              std::move(weights));
    }

    case Family::bipartite_neighborhood:
      require_object_keys(doc, {"family", "ground", "right_labels", "edges"});
      return parse_bipartite(doc, parse_ground(doc));

    case Family::uniform_matroid_rank:
      require_object_keys(doc, {"family", "ground", "k"});
      return SetFunctionSpec::uniform_matroid_rank(
          parse_ground(doc), parse_count(doc.at("k"), "k"));

    case Family::partition_matroid_rank:
      require_object_keys(doc, {"family", "ground", "partitions", "capacities"});
      return parse_partition(doc, parse_ground(doc));

    case Family::joint_entropy:
      require_object_keys(
          doc, {"family", "ground", "variables", "cardinalities", "table"});
      return parse_joint_entropy(doc, parse_ground(doc), epsilon);

    case Family::explicit_table:
      require_object_keys(doc, {"family", "ground", "values"});
      return parse_explicit_table(doc, parse_ground(doc));
  }
  throw ParseError("unknown function family");
}

SetFunctionSpec parse_spec_text(const std::string& text, double epsilon) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(doc, epsilon);
}

SetFunctionSpec load_spec_file(const std::string& path, double epsilon) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str(), epsilon);
}

json serialize_spec(const SetFunctionSpec& spec) {
  json doc;
  doc["family"] = family_name(spec.family());
  doc["ground"] = spec.ground()->labels();

  switch (spec.family()) {
    case Family::cardinality:
      break;

    case Family::weighted_modular: {
      const auto& p = spec.weighted_modular_params();
      doc["gamma"] = rational_to_string(p.gamma);
      doc["weights"] = weights_to_json(spec.ground(), p.weights);
      break;
    }

    case Family::budgeted_linear: {
      const auto& p = spec.budgeted_linear_params();
      doc["budget"] = rational_to_string(p.budget);
      doc["weights"] = weights_to_json(spec.ground(), p.weights);
      break;
    }

    case Family::bipartite_neighborhood: {
      const auto& p = spec.bipartite_params();
      doc["right_labels"] = p.right_labels;
      json edges = json::array();
      for (int i = 0; i < spec.ground()->size(); ++i) {
        for (int ri : p.adjacency[static_cast<std::size_t>(i)]) {
          edges.push_back(json::array(
              {spec.ground()->label(i),
               p.right_labels[static_cast<std::size_t>(ri)]}));
        }
      }
      doc["edges"] = std::move(edges);
      break;
    }

    case Family::uniform_matroid_rank:
      doc["k"] = spec.uniform_matroid_params().k;
      break;

    case Family::partition_matroid_rank: {
      const auto& p = spec.partition_matroid_params();
      json blocks = json::array();
      for (std::uint64_t mask : p.block_masks) {
        blocks.push_back(SubsetMask(spec.ground(), mask).to_labels());
      }
      doc["partitions"] = std::move(blocks);
      doc["capacities"] = p.capacities;
      break;
    }

    case Family::joint_entropy: {
      const auto& p = spec.joint_entropy_params();
      doc["variables"] = spec.ground()->labels();
      doc["cardinalities"] = p.cardinalities;
      doc["table"] = p.table;
      break;
    }

    case Family::explicit_table: {
      if (spec.is_approx()) {
        throw MalformedSpec(
            "approximate explicit tables have no file serialization");
      }
      const auto& p = spec.explicit_table_params();
      json values = json::object();
      for (std::uint64_t m = 0; m < p.values.size(); ++m) {
        values[SubsetMask(spec.ground(), m).to_string()] =
            rational_to_string(p.values[m].rat());
      }
      doc["values"] = std::move(values);
      break;
    }
  }
  return doc;
}

std::string canonical_spec_text(const SetFunctionSpec& spec) {
  // nlohmann's default object is key-sorted, so dump() is canonical.
  return serialize_spec(spec).dump();
}

std::string spec_digest(const SetFunctionSpec& spec) {
  const std::string text = canonical_spec_text(spec);
  std::uint64_t hash = 1469598103934665603ull;  // FNV offset basis
  for (unsigned char byte : text) {
    hash ^= byte;
    hash *= 1099511628211ull;  // FNV prime
  }
  static const char* kHex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) {
    out += kHex[(hash >> shift) & 0xF];
  }
  return out;
}

json violation_to_json(const ViolationRecord& record) {
  json doc;
  doc["kind"] = to_string(record.kind);
  json witness = json::array();
  for (const SubsetMask& mask : record.witness) {
    witness.push_back(mask.to_string());
  }
  doc["witness"] = std::move(witness);
  doc["lhs"] = value_to_json(record.lhs);
  doc["rhs"] = value_to_json(record.rhs);
  doc["margin"] = value_to_json(record.margin);
  return doc;
}

json report_to_json(const PropertyReport& report) {
  json doc;
  doc["verdict"] = to_string(report.verdict);
  doc["checked"] = report.checked;
  json violations = json::array();
  for (const ViolationRecord& record : report.violations) {
    violations.push_back(violation_to_json(record));
  }
  doc["violations"] = std::move(violations);
  if (report.seed.has_value()) doc["seed"] = *report.seed;
  if (report.zero_distance_pair_count > 0) {
    json pairs = json::array();
    for (const auto& [a, b] : report.zero_distance_pairs) {
      pairs.push_back(json::array({a.to_string(), b.to_string()}));
    }
    doc["zero_distance_pairs"] =
        json{{"count", report.zero_distance_pair_count},
             {"pairs", std::move(pairs)}};
  }
  return doc;
}

}  // namespace subjaccard
