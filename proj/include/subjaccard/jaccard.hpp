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

#include <map>
#include <string>
#include <vector>

#include "subjaccard/limits.hpp"
#include "subjaccard/set_function.hpp"
#include "subjaccard/subset_mask.hpp"
#include "subjaccard/value.hpp"

namespace subjaccard {

// Classic similarity |A&B| / |A|B|, with the empty/empty pair defined as 1.
Rational jaccard_index(const SubsetMask& a, const SubsetMask& b);

// Classic distance |A^B| / |A|B| = 1 - index, with empty/empty -> 0.
Rational jaccard_distance(const SubsetMask& a, const SubsetMask& b);

// Generalized distances driven by a nonnegative monotone set function f.
// Both are 0 by convention when f(A|B) = 0, and equal the classic distance
// when f is cardinality.
//
//   cap:   1 - f(A&B) / f(A|B)
//   delta: (f(A^B) - f(empty)) / f(A|B)
//
// Inconsistent oracle values surfaced along the way (negative value,
// f(A&B) > f(A|B), f(A^B) < f(empty)) throw PropertyViolation.
Value sub_jaccard_cap(const SetFunctionSpec& f, const SubsetMask& a,
                      const SubsetMask& b,
                      double epsilon = caps::kDefaultEpsilon);
Value sub_jaccard_delta(const SetFunctionSpec& f, const SubsetMask& a,
                        const SubsetMask& b,
                        double epsilon = caps::kDefaultEpsilon);
// 1 - sub_jaccard_delta; 1 on the f(A|B) = 0 edge case.
Value sub_jaccard_index(const SetFunctionSpec& f, const SubsetMask& a,
                        const SubsetMask& b,
                        double epsilon = caps::kDefaultEpsilon);

// Value-level cores shared with the verification engine — the single
// source of truth for the zero-denominator convention and the oracle
// evidence guards above.
Value cap_distance_values(const Value& f_intersection, const Value& f_union,
                          double epsilon);
Value delta_distance_values(const Value& f_sym_difference,
                            const Value& f_empty, const Value& f_union,
                            double epsilon);

// A nonnegative weight vector, exact or approximate (uniformly).
class WeightedVector {
 public:
  // Throws NegativeEntry on any negative coordinate.
  static WeightedVector exact(std::vector<Rational> entries);
  static WeightedVector approx(std::vector<double> entries,
                               double epsilon = caps::kDefaultEpsilon);
  // 0/1 membership vector of a subset, exact mode.
  static WeightedVector indicator(const SubsetMask& subset);

  bool is_exact() const { return exact_; }
  std::size_t size() const;
  Value at(std::size_t i) const;

 private:
  WeightedVector() = default;
  bool exact_ = true;
  std::vector<Rational> exact_entries_;
  std::vector<double> approx_entries_;
};

// 1 - sum(min(x_i, y_i)) / sum(max(x_i, y_i)); 0 when the denominator is
// zero. Throws LengthMismatch on different lengths and MixedModeError when
// one vector is exact and the other approximate.
Value vector_jaccard_distance(const WeightedVector& x, const WeightedVector& y,
                              double epsilon = caps::kDefaultEpsilon);

// Multiplicity map of a multiset. Negative counts are rejected.
using Multiset = std::map<std::string, long long>;

// The vector distance applied to the multiplicity vectors over the union
// of the two supports (in lexicographic label order). Always exact.
Rational multiset_jaccard_distance(const Multiset& a, const Multiset& b);

}  // namespace subjaccard
