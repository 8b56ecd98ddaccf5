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
//
// Command-line front end. Exit codes:
//   0  success (value printed / check holds / violation found)
//   1  check failed / no violation found
//   2  malformed input (JSON, spec structure, numbers, CLI usage)
//   3  unknown label in a command-line subset argument
//   4  cap exceeded, prerequisites not met, or the function broke an
//      assumption mid-computation

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subjaccard/errors.hpp"
#include "subjaccard/jaccard.hpp"
#include "subjaccard/spec_io.hpp"
#include "subjaccard/verify.hpp"

namespace {

using namespace subjaccard;
using nlohmann::json;

double resolve_epsilon(const std::optional<double>& flag) {
  if (flag.has_value()) return *flag;
  if (const char* env = std::getenv("SUBJACCARD_EPSILON")) {
    char* end = nullptr;
    errno = 0;
    double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || errno == ERANGE || !(value >= 0.0)) {
      throw ParseError(std::string("invalid SUBJACCARD_EPSILON: '") + env +
                       "'");
    }
    return value;
  }
  return caps::kDefaultEpsilon;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write: " + tmp);
    out << content;
    out.flush();
    if (!out) throw Error("short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("cannot move report into place: " + path);
  }
}

// Reports go to stdout and, when requested, to a file (written whole, via
// a temp file + rename, so readers never see a partial report).
void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) write_file_atomic(out_path, text);
}

// Wall-clock time goes to stderr, not into the report: reports must be
// byte-identical across reruns so they can be diffed and digested.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  void report(const char* command) const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    std::cerr << command << ": elapsed " << ms << " ms\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::vector<Rational> parse_inline_vector(const std::string& text) {
  std::vector<Rational> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    entries.push_back(rational_from_string(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return entries;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

int run_eval(const std::string& spec_path, const std::string& subset_text,
             double epsilon) {
  SetFunctionSpec spec = load_spec_file(spec_path, epsilon);
  SubsetMask subset = SubsetMask::parse(spec.ground(), subset_text);
  std::cout << spec.evaluate(subset).str() << "\n";
  return 0;
}

int run_dist(const std::string& variant, const std::string& spec_path,
             const std::string& a_text, const std::string& b_text,
             double epsilon) {
  SetFunctionSpec spec = load_spec_file(spec_path, epsilon);
  SubsetMask a = SubsetMask::parse(spec.ground(), a_text);
  SubsetMask b = SubsetMask::parse(spec.ground(), b_text);
  if (variant == "standard") {
    std::cout << rational_to_string(jaccard_distance(a, b)) << "\n";
  } else if (variant == "cap") {
    std::cout << sub_jaccard_cap(spec, a, b, epsilon).str() << "\n";
  } else if (variant == "delta") {
    std::cout << sub_jaccard_delta(spec, a, b, epsilon).str() << "\n";
  } else if (variant == "index") {
    std::cout << sub_jaccard_index(spec, a, b, epsilon).str() << "\n";
  } else {
    throw ParseError("unknown distance variant: '" + variant + "'");
  }
  return 0;
}

int run_props(const std::string& spec_path, double epsilon,
              const std::string& out_path) {
  Stopwatch timer;
  SetFunctionSpec spec = load_spec_file(spec_path, epsilon);
  json doc;
  doc["command"] = "props";
  doc["spec_digest"] = spec_digest(spec);
  doc["family"] = family_name(spec.family());
  doc["ground"] = spec.ground()->labels();
  doc["epsilon"] = epsilon;
  json properties;
  properties["nonnegative"] = report_to_json(is_nonnegative(spec, epsilon));
  properties["monotone"] = report_to_json(is_monotone(spec, epsilon));
  properties["submodular_pairwise"] =
      report_to_json(is_submodular_pairwise(spec, epsilon));
  properties["submodular_marginal"] =
      report_to_json(is_submodular_marginal(spec, epsilon));
  properties["modular"] = report_to_json(is_modular(spec, epsilon));
  doc["properties"] = std::move(properties);
  emit(doc, out_path);
  timer.report("props");
  return 0;
}

int run_check(const std::string& property, const std::string& spec_path,
              const std::string& distance, std::uint64_t samples,
              std::uint64_t seed, bool sampled, double epsilon,
              unsigned workers, const std::string& out_path) {
  Stopwatch timer;
  SetFunctionSpec spec = load_spec_file(spec_path, epsilon);
  VerifyOptions options;
  options.epsilon = epsilon;
  options.workers = workers;

  const bool is_metric = property == "metric";
  if (!is_metric && !distance.empty()) {
    throw ParseError("--distance only applies to the 'metric' property");
  }
  DistanceKind metric_kind =
      distance.empty() ? DistanceKind::delta
                       : distance_kind_from_name(distance);

  PropertyReport report;
  if (sampled) {
    SampledProperty what;
    if (property == "triangle-cap") {
      what = SampledProperty::triangle_cap;
    } else if (property == "triangle-delta") {
      what = SampledProperty::triangle_delta;
    } else if (property == "lemma1") {
      what = SampledProperty::lemma1;
    } else if (property == "corollary1") {
      what = SampledProperty::corollary1;
    } else if (property == "ordering") {
      what = SampledProperty::ordering;
    } else if (is_metric) {
      what = metric_kind == DistanceKind::cap ? SampledProperty::metric_cap
                                              : SampledProperty::metric_delta;
    } else {
      throw ParseError("unknown property: '" + property + "'");
    }
    report = sampled_check(spec, what, samples, seed, options);
  } else {
    if (property == "triangle-cap") {
      report = check_triangle(spec, DistanceKind::cap, options);
    } else if (property == "triangle-delta") {
      report = check_triangle(spec, DistanceKind::delta, options);
    } else if (property == "lemma1") {
      report = check_lemma1(spec, options);
    } else if (property == "corollary1") {
      report = check_corollary1(spec, options);
    } else if (property == "ordering") {
      report = check_ordering(spec, options);
    } else if (is_metric) {
      report = check_metric_axioms(spec, metric_kind, options);
    } else {
      throw ParseError("unknown property: '" + property + "'");
    }
  }

  json doc = report_to_json(report);
  doc["command"] = "check";
  doc["spec_digest"] = spec_digest(spec);
  doc["property"] = property;
  if (is_metric) doc["distance"] = to_string(metric_kind);
  emit(doc, out_path);
  timer.report("check");
  return report.failed() ? 1 : 0;
}

int run_find_violation(const std::string& spec_path, double epsilon,
                       unsigned workers, const std::string& out_path) {
  Stopwatch timer;
  SetFunctionSpec spec = load_spec_file(spec_path, epsilon);
  VerifyOptions options;
  options.epsilon = epsilon;
  options.workers = workers;
  std::optional<ViolationRecord> found = find_cap_counterexample(spec, options);
  json doc;
  doc["command"] = "find-violation";
  doc["spec_digest"] = spec_digest(spec);
  doc["found"] = found.has_value();
  if (found) doc["violation"] = violation_to_json(*found);
  emit(doc, out_path);
  timer.report("find-violation");
  return found ? 0 : 1;
}

int run_vecdist(const std::string& file_path, const std::string& x_text,
                const std::string& y_text, double epsilon) {
  WeightedVector x = WeightedVector::exact({});
  WeightedVector y = x;
  if (!file_path.empty()) {
    if (!x_text.empty() || !y_text.empty()) {
      throw ParseError("pass either a file or --x/--y, not both");
    }
    json doc = load_json_file(file_path);
    if (!doc.is_object() || !doc.contains("x") || !doc.contains("y") ||
        doc.size() != 2 || !doc.at("x").is_array() ||
        !doc.at("y").is_array()) {
      throw ParseError(
          "vector file must be an object with array keys 'x' and 'y'");
    }
    bool any_float = false;
    for (const char* key : {"x", "y"}) {
      for (const json& item : doc.at(key)) {
        if (item.is_number_float()) any_float = true;
      }
    }
    auto parse_vec = [&](const char* key) {
      if (any_float) {
        std::vector<double> entries;
        for (const json& item : doc.at(key)) {
          if (!item.is_number()) {
            throw ParseError(std::string("'") + key +
                             "' entries must be numbers in approximate mode");
          }
          entries.push_back(item.get<double>());
        }
        return WeightedVector::approx(std::move(entries), epsilon);
      }
      std::vector<Rational> entries;
      for (const json& item : doc.at(key)) {
        entries.push_back(parse_exact_number(item, key));
      }
      return WeightedVector::exact(std::move(entries));
    };
    x = parse_vec("x");
    y = parse_vec("y");
  } else {
    if (x_text.empty() || y_text.empty()) {
      throw ParseError("pass a vector file or both --x and --y");
    }
    x = WeightedVector::exact(parse_inline_vector(x_text));
    y = WeightedVector::exact(parse_inline_vector(y_text));
  }
  std::cout << vector_jaccard_distance(x, y, epsilon).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Jaccard-style distances generated by nonnegative monotone "
      "(sub)modular set functions, plus exhaustive and sampled checkers "
      "for the inequalities they satisfy"};
  app.require_subcommand(1);

  std::optional<double> eps_flag;
  app.add_option("--epsilon", eps_flag,
                 "Tolerance for approximate-mode comparisons (default: "
                 "SUBJACCARD_EPSILON or 1e-9)");
  unsigned workers = 0;
  app.add_option("--workers", workers,
                 "Worker threads for exhaustive checks (0 = all cores); the "
                 "result does not depend on this");

  std::string spec_path, subset_text, variant, a_text, b_text;
  std::string property, distance, out_path;
  std::string vec_file, x_text, y_text;
  std::uint64_t samples = 0, seed = 0;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate f on one subset");
  eval->add_option("spec", spec_path, "Function spec (JSON file)")->required();
  eval->add_option("subset", subset_text,
                   "Subset encoding: comma-joined labels, '-' for empty")
      ->required();

  CLI::App* dist = app.add_subcommand(
      "dist", "Distance or similarity between two subsets");
  dist->add_option("variant", variant, "standard | cap | delta | index")
      ->required()
      ->check(CLI::IsMember({"standard", "cap", "delta", "index"}));
  dist->add_option("spec", spec_path, "Function spec (JSON file)")->required();
  dist->add_option("a", a_text, "First subset")->required();
  dist->add_option("b", b_text, "Second subset")->required();

  CLI::App* props = app.add_subcommand(
      "props", "Verify structural properties and print a combined report");
  props->add_option("spec", spec_path, "Function spec (JSON file)")->required();
  props->add_option("--out", out_path, "Also write the report to this file");

  CLI::App* check = app.add_subcommand(
      "check", "Check one inequality exhaustively (or by sampling)");
  check
      ->add_option("property", property,
                   "triangle-cap | triangle-delta | lemma1 | corollary1 | "
                   "ordering | metric")
      ->required()
      ->check(CLI::IsMember({"triangle-cap", "triangle-delta", "lemma1",
                             "corollary1", "ordering", "metric"}));
  check->add_option("spec", spec_path, "Function spec (JSON file)")->required();
  check->add_option("--distance", distance,
                    "Distance for the metric property (default: delta)")
      ->check(CLI::IsMember({"cap", "delta"}));
  CLI::Option* sample_opt = check->add_option(
      "--sample", samples, "Sample this many tuples instead of exhausting");
  check->add_option("--seed", seed, "Seed for --sample (default 0)")
      ->needs(sample_opt);
  check->add_option("--out", out_path, "Also write the report to this file");

  CLI::App* find = app.add_subcommand(
      "find-violation",
      "Search for the first cap-distance triangle violation");
  find->add_option("spec", spec_path, "Function spec (JSON file)")->required();
  find->add_option("--out", out_path, "Also write the result to this file");

  CLI::App* vecdist = app.add_subcommand(
      "vecdist", "Jaccard distance between nonnegative weight vectors");
  vecdist->add_option("file", vec_file,
                      "JSON file with array keys 'x' and 'y'");
  vecdist->add_option("--x", x_text, "Inline vector, comma-separated numbers");
  vecdist->add_option("--y", y_text, "Inline vector, comma-separated numbers");

  for (CLI::App* sub : {eval, dist, props, check, find, vecdist}) {
    sub->fallthrough();
  }

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }

    const double epsilon = resolve_epsilon(eps_flag);
    if (eval->parsed()) return run_eval(spec_path, subset_text, epsilon);
    if (dist->parsed()) {
      return run_dist(variant, spec_path, a_text, b_text, epsilon);
    }
    if (props->parsed()) return run_props(spec_path, epsilon, out_path);
    if (check->parsed()) {
      return run_check(property, spec_path, distance, samples, seed,
                       sample_opt->count() > 0, epsilon, workers, out_path);
    }
    if (find->parsed()) {
      return run_find_violation(spec_path, epsilon, workers, out_path);
    }
    if (vecdist->parsed()) {
      return run_vecdist(vec_file, x_text, y_text, epsilon);
    }
    return 2;
  } catch (const UnknownLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const PrereqFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const PropertyViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
