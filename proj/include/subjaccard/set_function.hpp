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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "subjaccard/ground_set.hpp"
#include "subjaccard/limits.hpp"
#include "subjaccard/report.hpp"
#include "subjaccard/subset_mask.hpp"
#include "subjaccard/value.hpp"

namespace subjaccard {

enum class Family {
  cardinality,
  weighted_modular,
  budgeted_linear,
  bipartite_neighborhood,
  uniform_matroid_rank,
  partition_matroid_rank,
  joint_entropy,
  explicit_table,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // ParseError if unknown

struct CardinalityParams {};

// f(A) = gamma + sum of weights over A. Modular.
struct WeightedModularParams {
  Rational gamma;
  std::vector<Rational> weights;  // aligned with ground-set order
};

// f(A) = min(budget, sum of weights over A). Submodular, not modular.
struct BudgetedLinearParams {
  Rational budget;
  std::vector<Rational> weights;
};

// f(A) = size of the joint neighborhood of A in a bipartite graph.
struct BipartiteNeighborhoodParams {
  std::vector<std::string> right_labels;
  // adjacency[i] = sorted indices into right_labels adjacent to left i.
  std::vector<std::vector<int>> adjacency;
  // Packed neighborhood bitsets over the right side, words_per_left
  // words per left vertex (row-major).
  std::vector<std::uint64_t> words;
  int words_per_left = 0;
};

// f(A) = min(|A|, k).
struct UniformMatroidRankParams {
  std::uint64_t k = 0;
};

// f(A) = sum over blocks of min(|A intersect block|, capacity).
struct PartitionMatroidRankParams {
  std::vector<std::uint64_t> block_masks;
  std::vector<std::uint64_t> capacities;
};

// f(A) = joint Shannon entropy (bits) of the variables in A under the
// given joint distribution. Always approximate mode.
struct JointEntropyParams {
  std::vector<std::uint64_t> cardinalities;  // one per ground element
  std::vector<double> table;                 // row-major, element 0 slowest
  std::vector<std::uint64_t> strides;
};

// f given by one stored value per subset, indexed by mask.
struct ExplicitTableParams {
  std::vector<Value> values;
};

// An immutable, copyable description of a set function over a ground set.
// Construction validates structural invariants (MalformedSpec); built-in
// families carry exact rational values except joint_entropy, which is
// approximate; explicit tables carry whichever mode their values use
// (uniformly — mixing modes in one table is malformed).
class SetFunctionSpec {
 public:
  static SetFunctionSpec cardinality(GroundSetPtr ground);
  static SetFunctionSpec weighted_modular(GroundSetPtr ground, Rational gamma,
                                          std::vector<Rational> weights);
  static SetFunctionSpec budgeted_linear(GroundSetPtr ground, Rational budget,
                                         std::vector<Rational> weights);
  static SetFunctionSpec bipartite_neighborhood(
      GroundSetPtr ground, std::vector<std::string> right_labels,
      const std::vector<std::pair<std::string, std::string>>& edges);
  static SetFunctionSpec uniform_matroid_rank(GroundSetPtr ground,
                                              std::uint64_t k);
  static SetFunctionSpec partition_matroid_rank(
      GroundSetPtr ground, const std::vector<std::vector<std::string>>& blocks,
      std::vector<std::uint64_t> capacities);
  static SetFunctionSpec joint_entropy(GroundSetPtr ground,
                                       std::vector<std::uint64_t> cardinalities,
                                       std::vector<double> table,
                                       double epsilon = caps::kDefaultEpsilon);
  static SetFunctionSpec explicit_table(GroundSetPtr ground,
                                        std::vector<Value> values);

  Family family() const { return family_; }
  const GroundSetPtr& ground() const { return ground_; }
  bool is_approx() const;

  // Throws GroundMismatch when the mask lives over another ground set.
  Value evaluate(const SubsetMask& subset) const;
  // Trusted fast path over a raw mask (bits must fit the ground set).
  Value evaluate_mask(std::uint64_t mask) const;

  // The same function as an explicit table (identity on explicit tables).
  // Throws CapExceeded beyond the materialization cap.
  SetFunctionSpec materialize() const;

  // Parameter views; calling the accessor of another family is a logic
  // error and throws Error.
  const WeightedModularParams& weighted_modular_params() const;
  const BudgetedLinearParams& budgeted_linear_params() const;
  const BipartiteNeighborhoodParams& bipartite_params() const;
  const UniformMatroidRankParams& uniform_matroid_params() const;
  const PartitionMatroidRankParams& partition_matroid_params() const;
  const JointEntropyParams& joint_entropy_params() const;
  const ExplicitTableParams& explicit_table_params() const;

 private:
  using Params =
      std::variant<CardinalityParams, WeightedModularParams,
                   BudgetedLinearParams, BipartiteNeighborhoodParams,
                   UniformMatroidRankParams, PartitionMatroidRankParams,
                   JointEntropyParams, ExplicitTableParams>;

  SetFunctionSpec(GroundSetPtr ground, Family family, Params params)
      : ground_(std::move(ground)),
        family_(family),
        params_(std::move(params)) {}

  GroundSetPtr ground_;
  Family family_;
  Params params_;
};

// All 2^n values in ascending mask order (the vector behind materialize()).
std::vector<Value> materialized_values(const SetFunctionSpec& spec);

// Exhaustive property verifications. Reports carry the first few violating
// witnesses in deterministic scan order. All throw CapExceeded when the
// ground set is too large for the respective exhaustive scan.
PropertyReport is_nonnegative(const SetFunctionSpec& spec,
                              double epsilon = caps::kDefaultEpsilon);
// f(A) <= f(A + x) for every A and x outside A.
PropertyReport is_monotone(const SetFunctionSpec& spec,
                           double epsilon = caps::kDefaultEpsilon);
// f(A) + f(B) >= f(A|B) + f(A&B) over all ordered pairs.
PropertyReport is_submodular_pairwise(const SetFunctionSpec& spec,
                                      double epsilon = caps::kDefaultEpsilon);
// Marginal form: f(A+x) - f(A) >= f(B+x) - f(B) for A subseteq B, x outside B.
PropertyReport is_submodular_marginal(const SetFunctionSpec& spec,
                                      double epsilon = caps::kDefaultEpsilon);
// f(A) + f(B) == f(A|B) + f(A&B) over all ordered pairs.
PropertyReport is_modular(const SetFunctionSpec& spec,
                          double epsilon = caps::kDefaultEpsilon);

enum class RandomMode {
  modular,  // random gamma + weights, tabulated
  free,     // random table pushed up to its monotone closure
};

// Deterministic seeded generator of explicit tables with integer values in
// [0, kGeneratorMax]. Identical (seed, mode, ground size) always produces
// the identical table, independent of platform.
SetFunctionSpec random_monotone_function(GroundSetPtr ground,
                                         std::uint64_t seed, RandomMode mode);

}  // namespace subjaccard
