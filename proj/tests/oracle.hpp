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
// Test-side referee implementations. Everything here recomputes expected
// results through deliberately naive means (std::set algebra, direct loops
// over raw tables) so the tests do not inherit bugs from the code under
// test.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "subjaccard/ground_set.hpp"
#include "subjaccard/rational.hpp"
#include "subjaccard/set_function.hpp"
#include "subjaccard/subset_mask.hpp"

namespace oracle {

inline subjaccard::GroundSetPtr ground_of(std::vector<std::string> labels) {
  return subjaccard::GroundSet::create(std::move(labels));
}

// Labels "<prefix>1" .. "<prefix>n".
inline subjaccard::GroundSetPtr numbered_ground(int n,
                                                const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return subjaccard::GroundSet::create(std::move(labels));
}

inline subjaccard::SubsetMask subset(const subjaccard::GroundSetPtr& g,
                                     std::vector<std::string> labels) {
  return subjaccard::SubsetMask::of_labels(g, labels);
}

// Classic Jaccard distance recomputed with std::set algebra instead of
// bitmasks: |A^B| / |A|B|, empty/empty -> 0.
inline subjaccard::Rational set_jaccard_distance(
    const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> sa(a.begin(), a.end());
  std::set<std::string> sb(b.begin(), b.end());
  long uni = 0;
  long sym = 0;
  std::set<std::string> all = sa;
  all.insert(sb.begin(), sb.end());
  for (const std::string& x : all) {
    ++uni;
    if (sa.count(x) != sb.count(x)) ++sym;
  }
  if (uni == 0) return subjaccard::Rational(0);
  return subjaccard::make_rational(sym, uni);
}

// Raw exact table of a spec, as plain rationals indexed by mask.
inline std::vector<subjaccard::Rational> exact_table(
    const subjaccard::SetFunctionSpec& spec) {
  std::vector<subjaccard::Value> values = subjaccard::materialized_values(spec);
  std::vector<subjaccard::Rational> table;
  table.reserve(values.size());
  for (const subjaccard::Value& v : values) table.push_back(v.rat());
  return table;
}

// Direct formulas on a raw table. No zero-denominator convention here:
// callers pick inputs with f(A|B) > 0.
inline subjaccard::Rational table_cap(
    const std::vector<subjaccard::Rational>& f, std::uint64_t a,
    std::uint64_t b) {
  return subjaccard::Rational(1) - f[a & b] / f[a | b];
}

inline subjaccard::Rational table_delta(
    const std::vector<subjaccard::Rational>& f, std::uint64_t a,
    std::uint64_t b) {
  return (f[a ^ b] - f[0]) / f[a | b];
}

// Property referees by exhaustive definition-level loops.
inline bool table_monotone(const std::vector<subjaccard::Rational>& f) {
  const std::uint64_t size = f.size();
  for (std::uint64_t m = 0; m < size; ++m) {
    for (int x = 0; (std::uint64_t{1} << x) < size; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if ((m & bit) == 0 && f[m] > f[m | bit]) return false;
    }
  }
  return true;
}

inline bool table_submodular(const std::vector<subjaccard::Rational>& f) {
  const std::uint64_t size = f.size();
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      if (f[a | b] + f[a & b] > f[a] + f[b]) return false;
    }
  }
  return true;
}

inline bool table_modular(const std::vector<subjaccard::Rational>& f) {
  const std::uint64_t size = f.size();
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      if (f[a | b] + f[a & b] != f[a] + f[b]) return false;
    }
  }
  return true;
}

}  // namespace oracle
