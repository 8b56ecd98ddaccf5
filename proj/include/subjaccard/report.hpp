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
#include <utility>
#include <vector>

#include "subjaccard/subset_mask.hpp"
#include "subjaccard/value.hpp"

namespace subjaccard {

enum class Verdict {
  holds,                 // exhaustively verified
  fails,                 // at least one violation found
  sampled_no_violation,  // sampling finished clean (not a proof)
};

enum class ViolationKind {
  triangle,    // d(A,B) > d(A,C) + d(C,B)
  lemma1,      // the three-set product inequality failed
  corollary1,  // the two-set product inequality failed
  ordering,    // 0 <= cap <= delta <= 1 chain (or modular equality) broken
  property,    // a structural property (nonneg/monotone/submodular/...) broken
};

const char* to_string(Verdict v);
const char* to_string(ViolationKind k);

// One concrete violation. Every record is normalized to the shape
// "expected lhs <= rhs" with margin = lhs - rhs, so margin is strictly
// positive (beyond tolerance in approximate mode) for every record.
struct ViolationRecord {
  ViolationKind kind;
  // The sets the violated instance quantifies over, e.g. (A,B,C) for a
  // triangle, (S,T) for the pair inequality, (A,x-as-singleton) style
  // pairs for property scans.
  std::vector<SubsetMask> witness;
  Value lhs;
  Value rhs;
  Value margin;
};

// Outcome of one property or inequality check.
struct PropertyReport {
  Verdict verdict = Verdict::holds;
  // Instances examined (pairs, triples, or samples, depending on the check).
  std::uint64_t checked = 0;
  // First few violations in deterministic scan order (all runs agree on
  // which ones these are); empty iff verdict != fails.
  std::vector<ViolationRecord> violations;
  // Present for sampled runs only.
  std::optional<std::uint64_t> seed;

  // Metric-axiom checks only: distinct sets at distance zero. These are
  // information (the distance is then a pseudometric, not a metric), not
  // violations, and do not affect the verdict.
  std::uint64_t zero_distance_pair_count = 0;
  std::vector<std::pair<SubsetMask, SubsetMask>> zero_distance_pairs;

  bool failed() const { return verdict == Verdict::fails; }
};

}  // namespace subjaccard
