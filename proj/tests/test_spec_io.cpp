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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "subjaccard/errors.hpp"
#include "subjaccard/spec_io.hpp"
#include "subjaccard/verify.hpp"

#include "oracle.hpp"

using namespace subjaccard;
using nlohmann::json;

namespace {

// Independent digest referee; must match spec_digest byte for byte.
std::string fnv1a64_hex(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

const char* kSpecTexts[] = {
    R"({"family":"cardinality","ground":["a","b","c"]})",
    R"({"family":"weighted_modular","ground":["1","2","3"],
        "gamma":"1/2","weights":{"1":2,"2":"3","3":"5/2"}})",
    R"({"family":"budgeted_linear","ground":["a","b"],
        "budget":"1","weights":{"a":"1","b":"1"}})",
    R"({"family":"bipartite_neighborhood","ground":["u1","u2"],
        "right_labels":["v1","v2"],
        "edges":[["u1","v1"],["u2","v1"],["u2","v2"]]})",
    R"({"family":"uniform_matroid_rank","ground":["x","y","z"],"k":2})",
    R"({"family":"partition_matroid_rank","ground":["a","b","c"],
        "partitions":[["a","b"],["c"]],"capacities":[1,1]})",
    R"({"family":"joint_entropy","ground":["x","y"],"variables":["x","y"],
        "cardinalities":[2,2],"table":[0.25,0.25,0.25,0.25]})",
    R"({"family":"explicit_table","ground":["a","b"],
        "values":{"-":0,"a":"1","b":1,"a,b":"3/2"}})",
};

}  // namespace

TEST_CASE("every family parses from its document form") {
  SetFunctionSpec card = parse_spec_text(kSpecTexts[0]);
  CHECK(card.family() == Family::cardinality);
  CHECK(card.ground()->labels() ==
        std::vector<std::string>{"a", "b", "c"});

  SetFunctionSpec wm = parse_spec_text(kSpecTexts[1]);
  CHECK(wm.family() == Family::weighted_modular);
  CHECK(wm.weighted_modular_params().gamma == make_rational(1, 2));
  CHECK(wm.weighted_modular_params().weights[2] == make_rational(5, 2));

  SetFunctionSpec bl = parse_spec_text(kSpecTexts[2]);
  CHECK(bl.evaluate_mask(0b11).rat() == 1);

  SetFunctionSpec bn = parse_spec_text(kSpecTexts[3]);
  CHECK(bn.evaluate_mask(0b01).rat() == 1);
  CHECK(bn.evaluate_mask(0b10).rat() == 2);

  SetFunctionSpec um = parse_spec_text(kSpecTexts[4]);
  CHECK(um.uniform_matroid_params().k == 2);

  SetFunctionSpec pm = parse_spec_text(kSpecTexts[5]);
  CHECK(pm.evaluate_mask(0b111).rat() == 2);

  SetFunctionSpec je = parse_spec_text(kSpecTexts[6]);
  CHECK(je.is_approx());
  CHECK(je.evaluate_mask(0b11).num() == doctest::Approx(2.0));

  SetFunctionSpec et = parse_spec_text(kSpecTexts[7]);
  CHECK(et.evaluate_mask(0b11).rat() == make_rational(3, 2));
  CHECK(et.evaluate_mask(0).rat() == 0);
}

TEST_CASE("serialization is a canonical fixed point") {
  for (const char* text : kSpecTexts) {
    CAPTURE(text);
    SetFunctionSpec first = parse_spec_text(text);
    std::string canon = canonical_spec_text(first);
    SetFunctionSpec second = parse_spec_text(canon);
    CHECK(canonical_spec_text(second) == canon);
    CHECK(spec_digest(first) == spec_digest(second));
    CHECK(second.family() == first.family());
    CHECK(second.ground()->labels() == first.ground()->labels());
  }
}

TEST_CASE("digests have the advertised shape and hash") {
  for (const char* text : kSpecTexts) {
    SetFunctionSpec spec = parse_spec_text(text);
    std::string digest = spec_digest(spec);
    REQUIRE(digest.size() == 8 + 16);
    CHECK(digest.substr(0, 8) == "fnv1a64:");
    CHECK(digest.substr(8) == fnv1a64_hex(canonical_spec_text(spec)));
  }
}

TEST_CASE("the unit-budget pair digest is frozen") {
  // Regression pin: this exact value is also asserted by the CLI suite.
  SetFunctionSpec spec = parse_spec_text(kSpecTexts[2]);
  CHECK(spec_digest(spec) == "fnv1a64:4c1f296853d5b11f");
}

TEST_CASE("equivalent documents with different formatting share a digest") {
  const char* spaced = R"({
    "weights": {"b": "1", "a": "1"},
    "family": "budgeted_linear",
    "ground": ["a", "b"],
    "budget": 1
  })";
  CHECK(spec_digest(parse_spec_text(spaced)) ==
        spec_digest(parse_spec_text(kSpecTexts[2])));
}

TEST_CASE("parser rejects structural mistakes") {
  CHECK_THROWS_AS(parse_spec_text("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_spec_text("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_spec_text(R"({"ground":["a"]})"), ParseError);
  CHECK_THROWS_AS(parse_spec_text(R"({"family":"wat","ground":["a"]})"),
                  ParseError);
  // Unknown or missing keys are errors; nothing is silently ignored.
  CHECK_THROWS_AS(
      parse_spec_text(R"({"family":"cardinality","ground":["a"],"x":1})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_spec_text(R"({"family":"uniform_matroid_rank","ground":["a"]})"),
      ParseError);
  CHECK_THROWS_AS(parse_spec_text(R"({"family":"cardinality","ground":[]})"),
                  MalformedSpec);
  CHECK_THROWS_AS(
      parse_spec_text(R"({"family":"cardinality","ground":["a","a"]})"),
      MalformedSpec);
  CHECK_THROWS_AS(
      parse_spec_text(R"({"family":"cardinality","ground":[1]})"), ParseError);
}

TEST_CASE("parser rejects malformed weights") {
  // One weight per ground label, keyed exactly by the labels.
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"weighted_modular","ground":["a","b"],
                          "gamma":0,"weights":{"a":1}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"weighted_modular","ground":["a"],
                          "gamma":0,"weights":{"a":1,"b":2}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"weighted_modular","ground":["a"],
                          "gamma":0,"weights":{"a":-1}})"),
                  MalformedSpec);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"weighted_modular","ground":["a"],
                          "gamma":0,"weights":[1]})"),
                  ParseError);
}

TEST_CASE("exact slots reject JSON floats") {
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"weighted_modular","ground":["a"],
                          "gamma":0.5,"weights":{"a":1}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"budgeted_linear","ground":["a"],
                          "budget":1.5,"weights":{"a":1}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"explicit_table","ground":["a"],
                          "values":{"-":0.5,"a":1}})"),
                  ParseError);
  // The entropy table is the one approximate slot, so floats are fine there.
  SetFunctionSpec ok = parse_spec_text(kSpecTexts[6]);
  CHECK(ok.family() == Family::joint_entropy);
}

TEST_CASE("parser rejects malformed graph and partition documents") {
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"bipartite_neighborhood","ground":["u"],
                          "right_labels":["v"],"edges":[["u","nope"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"bipartite_neighborhood","ground":["u"],
                          "right_labels":["v"],"edges":[["u"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"partition_matroid_rank","ground":["a","b"],
                          "partitions":[["a"]],"capacities":[1]})"),
                  MalformedSpec);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"partition_matroid_rank","ground":["a","b"],
                          "partitions":[["a","z"],["b"]],"capacities":[1,1]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"partition_matroid_rank","ground":["a","b"],
                          "partitions":[["a"],["b"]],"capacities":[1]})"),
                  MalformedSpec);
}

TEST_CASE("parser rejects malformed entropy documents") {
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"joint_entropy","ground":["x","y"],
                          "variables":["y","x"],"cardinalities":[2,2],
                          "table":[0.25,0.25,0.25,0.25]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"joint_entropy","ground":["x"],
                          "variables":["x"],"cardinalities":[2],
                          "table":["0.5","0.5"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"joint_entropy","ground":["x"],
                          "variables":["x"],"cardinalities":[2],
                          "table":[0.5,0.6]})"),
                  MalformedSpec);
}

TEST_CASE("parser rejects malformed explicit tables") {
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"explicit_table","ground":["a"],
                          "values":{"-":0}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"explicit_table","ground":["a"],
                          "values":{"-":0,"nope":1}})"),
                  ParseError);
  // Subset keys may list labels in any order, so "b,a" is a valid
  // encoding of {a, b}...
  SetFunctionSpec reordered = parse_spec_text(
      R"({"family":"explicit_table","ground":["a","b"],
          "values":{"-":0,"a":1,"b":1,"b,a":2}})");
  CHECK(reordered.evaluate_mask(3).rat() == 2);
  // ...but two keys that decode to the same subset are rejected.
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"explicit_table","ground":["a","b"],
                          "values":{"-":0,"a":1,"a,b":2,"b,a":2}})"),
                  ParseError);
}

TEST_CASE("counts must be nonnegative integers") {
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"uniform_matroid_rank","ground":["a"],
                          "k":-1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"uniform_matroid_rank","ground":["a"],
                          "k":1.5})"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"family":"uniform_matroid_rank","ground":["a"],
                          "k":"2"})"),
                  ParseError);
}

TEST_CASE("parse_exact_number accepts integers and canonical strings only") {
  CHECK(parse_exact_number(json(42), "x") == 42);
  CHECK(parse_exact_number(json(-7), "x") == -7);
  CHECK(parse_exact_number(json("3/4"), "x") == make_rational(3, 4));
  CHECK(parse_exact_number(json("-1.5"), "x") == make_rational(-3, 2));
  CHECK(parse_exact_number(json(std::uint64_t{1} << 40), "x") ==
        rational_from_string("1099511627776"));
  CHECK_THROWS_AS(parse_exact_number(json(0.5), "x"), ParseError);
  CHECK_THROWS_AS(parse_exact_number(json(true), "x"), ParseError);
  CHECK_THROWS_AS(parse_exact_number(json(nullptr), "x"), ParseError);
  CHECK_THROWS_AS(parse_exact_number(json::array(), "x"), ParseError);
  CHECK_THROWS_AS(parse_exact_number(json("x/y"), "x"), ParseError);
}

TEST_CASE("value_to_json renders by mode") {
  CHECK(value_to_json(Value::exact(make_rational(2, 3))) == json("2/3"));
  CHECK(value_to_json(Value::exact(5)) == json("5"));
  json approx = value_to_json(Value::approx(0.25));
  REQUIRE(approx.is_number());
  CHECK(approx.get<double>() == doctest::Approx(0.25));
}

TEST_CASE("approximate explicit tables have no file form") {
  GroundSetPtr g = oracle::ground_of({"a"});
  SetFunctionSpec t = SetFunctionSpec::explicit_table(
      g, {Value::approx(0.0), Value::approx(1.0)});
  CHECK_THROWS_AS(serialize_spec(t), MalformedSpec);
}

TEST_CASE("reports render violations, seeds, and zero-distance blocks") {
  SetFunctionSpec f = parse_spec_text(kSpecTexts[2]);
  PropertyReport fail_report = check_triangle(f, DistanceKind::cap);
  json doc = report_to_json(fail_report);
  CHECK(doc.at("verdict") == "fails");
  CHECK(doc.at("checked") == 64);
  REQUIRE(doc.contains("violations"));
  const json& v = doc.at("violations").at(0);
  CHECK(v.at("kind") == "triangle");
  CHECK(v.at("lhs") == "1");
  CHECK(v.at("rhs") == "0");
  CHECK(v.at("margin") == "1");
  CHECK(v.at("witness") == json::array({"a", "b", "a,b"}));
  CHECK(!doc.contains("seed"));
  CHECK(!doc.contains("zero_distance_pairs"));

  PropertyReport sampled =
      sampled_check(f, SampledProperty::triangle_delta, 100, 9);
  json sdoc = report_to_json(sampled);
  CHECK(sdoc.at("verdict") == "sampled_no_violation");
  CHECK(sdoc.at("seed") == 9);

  GroundSetPtr g = oracle::ground_of({"u1", "u2", "u3"});
  SetFunctionSpec cover =
      SetFunctionSpec::bipartite_neighborhood(g, {"v1"}, {{"u3", "v1"}});
  json mdoc = report_to_json(check_metric_axioms(cover, DistanceKind::delta));
  REQUIRE(mdoc.contains("zero_distance_pairs"));
  CHECK(mdoc.at("zero_distance_pairs").at("count") == 12);
  CHECK(mdoc.at("zero_distance_pairs").at("pairs").size() == 4);
}

TEST_CASE("load_spec_file reports missing and malformed files") {
  CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), ParseError);
  const char* path = "spec_io_tmp_bad.json";
  {
    std::FILE* f = std::fopen(path, "w");
    REQUIRE(f != nullptr);
    std::fputs("{ not json", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(load_spec_file(path), ParseError);
  std::remove(path);
}

TEST_CASE("load_spec_file round-trips through the canonical writer") {
  const char* path = "spec_io_tmp_good.json";
  SetFunctionSpec original = parse_spec_text(kSpecTexts[3]);
  {
    std::FILE* f = std::fopen(path, "w");
    REQUIRE(f != nullptr);
    std::fputs(canonical_spec_text(original).c_str(), f);
    std::fclose(f);
  }
  SetFunctionSpec loaded = load_spec_file(path);
  CHECK(spec_digest(loaded) == spec_digest(original));
  std::remove(path);
}
