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

#include <cstdint>
#include <optional>
#include <string>

#include "subjaccard/limits.hpp"
#include "subjaccard/report.hpp"
#include "subjaccard/set_function.hpp"

namespace subjaccard {

enum class DistanceKind { cap, delta };

const char* to_string(DistanceKind kind);
DistanceKind distance_kind_from_name(const std::string& name);

struct VerifyOptions {
  double epsilon = caps::kDefaultEpsilon;
  // Worker threads for exhaustive scans; 0 means hardware concurrency.
  // Results are identical regardless of the worker count.
  unsigned workers = 0;
};

// Exhaustive scans below examine every instance in ascending mask order
// (tuples ordered lexicographically), retain the first few violations, and
// throw PrereqFailed when the function does not satisfy the hypotheses of
// the statement being checked:
//
//   triangle, metric:      nonnegative + monotone
//   lemma1, corollary1:    nonnegative + monotone + submodular
//   ordering:              nonnegative + monotone + submodular
//   find_cap_counterexample: nonnegative + monotone + submodular
//
// All throw CapExceeded when the exhaustive scan would be too large.

// d(A,B) <= d(A,C) + d(C,B) over all ordered triples.
PropertyReport check_triangle(const SetFunctionSpec& f, DistanceKind kind,
                              const VerifyOptions& options = {});

// f(A&C) * f(B|C) + f(A|C) * f(B&C) <= f(C) * (f(A) + f(B)) over all
// ordered triples (A,B,C).
PropertyReport check_lemma1(const SetFunctionSpec& f,
                            const VerifyOptions& options = {});

// f(S&T) * f(S|T) <= f(S) * f(T) over all ordered pairs (S,T).
PropertyReport check_corollary1(const SetFunctionSpec& f,
                                const VerifyOptions& options = {});

// 0 <= cap <= delta <= 1 over all ordered pairs; additionally cap == delta
// on every pair when the function is modular.
PropertyReport check_ordering(const SetFunctionSpec& f,
                              const VerifyOptions& options = {});

// Pseudometric axioms for the chosen distance: d(A,A) = 0, d >= 0,
// symmetry, and the triangle inequality. Distinct sets at distance zero
// are reported as information (zero_distance_pairs), not violations.
PropertyReport check_metric_axioms(const SetFunctionSpec& f, DistanceKind kind,
                                   const VerifyOptions& options = {});

// Scans ordered pairs (A,B) in ascending mask order for the first pattern
//   f(A) = f(B) = f(A|B) > f(A&B) >= 0,  A, B nonempty and incomparable,
// and returns the resulting cap-distance triangle violation with
// C = A|B: cap(A,B) > cap(A,C) + cap(C,B). Returns nullopt when no such
// pair exists (e.g. for any modular function).
std::optional<ViolationRecord> find_cap_counterexample(
    const SetFunctionSpec& f, const VerifyOptions& options = {});

enum class SampledProperty {
  triangle_cap,
  triangle_delta,
  lemma1,
  corollary1,
  ordering,
  metric_cap,
  metric_delta,
};

// Randomized spot-check of one property: draws `samples` independent
// tuples from mt19937_64(seed) and evaluates the property on each. Never
// throws PrereqFailed; oracle misbehavior discovered mid-sample (negative
// value, f(A&B) > f(A|B), f(A^B) < f(empty)) becomes a property-kind
// violation. A clean run yields Verdict::sampled_no_violation, which is
// evidence, not proof. Identical (function, property, samples, seed)
// produce identical reports on every platform.
PropertyReport sampled_check(const SetFunctionSpec& f, SampledProperty what,
                             std::uint64_t samples, std::uint64_t seed,
                             const VerifyOptions& options = {});

}  // namespace subjaccard
