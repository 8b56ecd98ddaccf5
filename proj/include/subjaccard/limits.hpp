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

namespace subjaccard {
namespace caps {

// One 64-bit word per subset: the ground set never exceeds 64 elements.
inline constexpr int kMaskWidth = 64;

// Power-set iteration is refused beyond 2^20 subsets.
inline constexpr int kEnumerate = 20;

// Materializing a function into an explicit table is refused beyond 2^16.
inline constexpr int kMaterialize = 16;

// Exhaustive quadratic scans (pairwise submodularity, modularity,
// product inequality over pairs, distance-ordering, metric symmetry).
inline constexpr int kExhaustivePairsExact = 12;
inline constexpr int kExhaustivePairsApprox = 8;

// Exhaustive cubic scans (triangle inequality, the product inequality
// over triples, metric axioms).
inline constexpr int kExhaustiveTriplesExact = 8;
inline constexpr int kExhaustiveTriplesApprox = 6;

// Linear / marginal property scans (nonnegativity, monotonicity,
// marginal submodularity) share the materialization cap.
inline constexpr int kPropertyScan = kMaterialize;

// Default tolerance for approximate-mode comparisons. Overridable per
// call, per CLI flag, or through the SUBJACCARD_EPSILON environment
// variable; exact mode ignores it.
inline constexpr double kDefaultEpsilon = 1e-9;

// Generated weights/table values are integers drawn from [0, kGeneratorMax].
inline constexpr int kGeneratorMax = 100;

// Random free-mode tables enumerate the whole power set several times
// while taking the monotone closure, so the generator stays small.
inline constexpr int kRandomTable = 8;

// At most this many witnesses are retained per report.
inline constexpr int kMaxWitnesses = 4;

}  // namespace caps
}  // namespace subjaccard
