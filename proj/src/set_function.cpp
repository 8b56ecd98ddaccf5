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

#include "subjaccard/set_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "subjaccard/errors.hpp"

namespace subjaccard {

namespace {

// Entropy marginalization is refused when table-size * 2^n would explode.
constexpr std::uint64_t kEntropyTableCap = std::uint64_t{1} << 20;
constexpr std::uint64_t kEntropyMaterializeWork = std::uint64_t{1} << 26;

void require_width(const GroundSetPtr& ground, int cap, const char* op) {
  if (ground->size() > cap) {
    throw CapExceeded(std::string(op) + " capped at n=" + std::to_string(cap) +
                      ", got n=" + std::to_string(ground->size()));
  }
}

void require_weight_count(const GroundSetPtr& ground,
                          const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != ground->size()) {
    throw MalformedSpec("expected one weight per ground element (" +
                        std::to_string(ground->size()) + "), got " +
                        std::to_string(weights.size()));
  }
}

void require_nonnegative_weights(const std::vector<Rational>& weights) {
  for (const Rational& w : weights) {
    if (w < 0) {
      throw MalformedSpec("negative weight: " + rational_to_string(w));
    }
  }
}

Rational sum_over_mask(const std::vector<Rational>& weights,
                       std::uint64_t mask) {
  Rational sum(0);
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    sum += weights[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return sum;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::cardinality:
      return "cardinality";
    case Family::weighted_modular:
      return "weighted_modular";
    case Family::budgeted_linear:
      return "budgeted_linear";
    case Family::bipartite_neighborhood:
      return "bipartite_neighborhood";
    case Family::uniform_matroid_rank:
      return "uniform_matroid_rank";
    case Family::partition_matroid_rank:
      return "partition_matroid_rank";
    case Family::joint_entropy:
      return "joint_entropy";
    case Family::explicit_table:
      return "explicit_table";
  }
  throw Error("unreachable family");
}

Family family_from_name(const std::string& name) {
  static const std::pair<const char*, Family> kTable[] = {
      {"cardinality", Family::cardinality},
      {"weighted_modular", Family::weighted_modular},
      {"budgeted_linear", Family::budgeted_linear},
      {"bipartite_neighborhood", Family::bipartite_neighborhood},
      {"uniform_matroid_rank", Family::uniform_matroid_rank},
      {"partition_matroid_rank", Family::partition_matroid_rank},
      {"joint_entropy", Family::joint_entropy},
      {"explicit_table", Family::explicit_table},
  };
  for (const auto& [text, family] : kTable) {
    if (name == text) return family;
  }
  throw ParseError("unknown function family: '" + name + "'");
}

SetFunctionSpec SetFunctionSpec::cardinality(GroundSetPtr ground) {
  return SetFunctionSpec(std::move(ground), Family::cardinality,
                         CardinalityParams{});
}

SetFunctionSpec SetFunctionSpec::weighted_modular(
    GroundSetPtr ground, Rational gamma, std::vector<Rational> weights) {
  require_weight_count(ground, weights);
  require_nonnegative_weights(weights);
  if (gamma < 0) {
    throw MalformedSpec("negative gamma: " + rational_to_string(gamma));
  }
  return SetFunctionSpec(
      std::move(ground), Family::weighted_modular,
      WeightedModularParams{std::move(gamma), std::move(weights)});
}

SetFunctionSpec SetFunctionSpec::budgeted_linear(
    GroundSetPtr ground, Rational budget, std::vector<Rational> weights) {
  require_weight_count(ground, weights);
  require_nonnegative_weights(weights);
  if (budget < 0) {
    throw MalformedSpec("negative budget: " + rational_to_string(budget));
  }
  return SetFunctionSpec(
      std::move(ground), Family::budgeted_linear,
      BudgetedLinearParams{std::move(budget), std::move(weights)});
}

SetFunctionSpec SetFunctionSpec::bipartite_neighborhood(
    GroundSetPtr ground, std::vector<std::string> right_labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> seen;
  for (const std::string& label : right_labels) {
    if (label.empty()) throw MalformedSpec("empty right-side label");
    if (!seen.insert(label).second) {
      throw MalformedSpec("duplicate right-side label: '" + label + "'");
    }
  }

  BipartiteNeighborhoodParams params;
  params.right_labels = std::move(right_labels);
  params.adjacency.assign(static_cast<std::size_t>(ground->size()), {});

  auto right_index = [&params](const std::string& label) {
    auto it = std::find(params.right_labels.begin(),
                        params.right_labels.end(), label);
    if (it == params.right_labels.end()) throw UnknownLabel(label);
    return static_cast<int>(it - params.right_labels.begin());
  };

  for (const auto& [left, right] : edges) {
    int li = ground->index_of(left);
    int ri = right_index(right);
    auto& row = params.adjacency[static_cast<std::size_t>(li)];
    if (std::find(row.begin(), row.end(), ri) != row.end()) {
      throw MalformedSpec("duplicate edge: ('" + left + "', '" + right + "')");
    }
    row.push_back(ri);
  }
  for (auto& row : params.adjacency) std::sort(row.begin(), row.end());

  params.words_per_left = static_cast<int>((params.right_labels.size() + 63) / 64);
  if (params.words_per_left == 0) params.words_per_left = 1;
  params.words.assign(static_cast<std::size_t>(ground->size()) *
                          static_cast<std::size_t>(params.words_per_left),
                      0);
  for (int i = 0; i < ground->size(); ++i) {
    for (int ri : params.adjacency[static_cast<std::size_t>(i)]) {
      params.words[static_cast<std::size_t>(i) * params.words_per_left +
                   static_cast<std::size_t>(ri / 64)] |=
          std::uint64_t{1} << (ri % 64);
    }
  }

  return SetFunctionSpec(std::move(ground), Family::bipartite_neighborhood,
                         std::move(params));
}

SetFunctionSpec SetFunctionSpec::uniform_matroid_rank(GroundSetPtr ground,
                                                      std::uint64_t k) {
  return SetFunctionSpec(std::move(ground), Family::uniform_matroid_rank,
                         UniformMatroidRankParams{k});
}

SetFunctionSpec SetFunctionSpec::partition_matroid_rank(
    GroundSetPtr ground, const std::vector<std::vector<std::string>>& blocks,
    std::vector<std::uint64_t> capacities) {
  if (blocks.size() != capacities.size()) {
    throw MalformedSpec("expected one capacity per block, got " +
                        std::to_string(capacities.size()) + " for " +
                        std::to_string(blocks.size()) + " blocks");
  }
  PartitionMatroidRankParams params;
  params.capacities = std::move(capacities);
  std::uint64_t covered = 0;
  for (const auto& block : blocks) {
    std::uint64_t mask = 0;
    for (const std::string& label : block) {
      std::uint64_t bit = std::uint64_t{1} << ground->index_of(label);
      if (mask & bit) {
        throw MalformedSpec("label repeats within a block: '" + label + "'");
      }
      mask |= bit;
    }
    if (mask & covered) throw MalformedSpec("partition blocks overlap");
    covered |= mask;
    params.block_masks.push_back(mask);
  }
  if (covered != ground->full_mask()) {
    throw MalformedSpec("partition blocks must cover the ground set");
  }
  return SetFunctionSpec(std::move(ground), Family::partition_matroid_rank,
                         std::move(params));
}

SetFunctionSpec SetFunctionSpec::joint_entropy(
    GroundSetPtr ground, std::vector<std::uint64_t> cardinalities,
    std::vector<double> table, double epsilon) {
  if (static_cast<int>(cardinalities.size()) != ground->size()) {
    throw MalformedSpec("expected one cardinality per ground element");
  }
  std::uint64_t product = 1;
  for (std::uint64_t c : cardinalities) {
    if (c < 1) throw MalformedSpec("variable cardinality must be >= 1");
    if (product > kEntropyTableCap / c) {
      throw MalformedSpec("joint distribution table too large");
    }
    product *= c;
  }
  if (table.size() != product) {
    throw MalformedSpec("joint table needs " + std::to_string(product) +
                        " entries, got " + std::to_string(table.size()));
  }
  double sum = 0.0;
  for (double p : table) {
    if (!(p >= 0.0)) {
      throw MalformedSpec("negative or non-finite probability in joint table");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > epsilon) {
    throw MalformedSpec("joint table probabilities sum to " +
                        std::to_string(sum) + ", not 1");
  }

  JointEntropyParams params;
  params.strides.assign(cardinalities.size(), 1);
  for (int i = static_cast<int>(cardinalities.size()) - 2; i >= 0; --i) {
    params.strides[static_cast<std::size_t>(i)] =
        params.strides[static_cast<std::size_t>(i) + 1] *
        cardinalities[static_cast<std::size_t>(i) + 1];
  }
  params.cardinalities = std::move(cardinalities);
  params.table = std::move(table);
  return SetFunctionSpec(std::move(ground), Family::joint_entropy,
                         std::move(params));
}

SetFunctionSpec SetFunctionSpec::explicit_table(GroundSetPtr ground,
                                                std::vector<Value> values) {
  require_width(ground, caps::kMaterialize, "explicit tables");
  std::uint64_t expected = std::uint64_t{1} << ground->size();
  if (values.size() != expected) {
    throw MalformedSpec("explicit table needs " + std::to_string(expected) +
                        " values, got " + std::to_string(values.size()));
  }
  bool exact = values.front().is_exact();
  for (const Value& v : values) {
    if (v.is_exact() != exact) {
      throw MalformedSpec("explicit table mixes exact and approximate values");
    }
  }
  return SetFunctionSpec(std::move(ground), Family::explicit_table,
                         ExplicitTableParams{std::move(values)});
}

bool SetFunctionSpec::is_approx() const {
  if (family_ == Family::joint_entropy) return true;
  if (family_ == Family::explicit_table) {
    return !std::get<ExplicitTableParams>(params_).values.front().is_exact();
  }
  return false;
}

Value SetFunctionSpec::evaluate(const SubsetMask& subset) const {
  if (subset.ground() != ground_ && !subset.ground()->same_as(*ground_)) {
    throw GroundMismatch("subset uses a different ground set than the function");
  }
  return evaluate_mask(subset.bits());
}

Value SetFunctionSpec::evaluate_mask(std::uint64_t mask) const {
  if ((mask & ~ground_->full_mask()) != 0) {
    throw Error("mask has bits outside the ground set");
  }
  switch (family_) {
    case Family::cardinality:
      return Value::exact(std::popcount(mask));

    case Family::weighted_modular: {
      const auto& p = std::get<WeightedModularParams>(params_);
      return Value::exact(p.gamma + sum_over_mask(p.weights, mask));
    }

    case Family::budgeted_linear: {
      const auto& p = std::get<BudgetedLinearParams>(params_);
      Rational sum = sum_over_mask(p.weights, mask);
      return Value::exact(sum < p.budget ? sum : p.budget);
    }

    case Family::bipartite_neighborhood: {
      const auto& p = std::get<BipartiteNeighborhoodParams>(params_);
      int count = 0;
      for (int w = 0; w < p.words_per_left; ++w) {
        std::uint64_t acc = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          acc |= p.words[static_cast<std::size_t>(std::countr_zero(rest)) *
                             p.words_per_left +
                         static_cast<std::size_t>(w)];
        }
        count += std::popcount(acc);
      }
      return Value::exact(count);
    }

    case Family::uniform_matroid_rank: {
      const auto& p = std::get<UniformMatroidRankParams>(params_);
      std::uint64_t card = static_cast<std::uint64_t>(std::popcount(mask));
      return Value::exact(static_cast<long>(std::min(card, p.k)));
    }

    case Family::partition_matroid_rank: {
      const auto& p = std::get<PartitionMatroidRankParams>(params_);
      std::uint64_t rank = 0;
      for (std::size_t j = 0; j < p.block_masks.size(); ++j) {
        std::uint64_t hit =
            static_cast<std::uint64_t>(std::popcount(mask & p.block_masks[j]));
        rank += std::min(hit, p.capacities[j]);
      }
      return Value::exact(static_cast<long>(rank));
    }

    case Family::joint_entropy: {
      const auto& p = std::get<JointEntropyParams>(params_);
      if (mask == 0) return Value::approx(0.0);
      // Marginalize the joint table onto the variables in the mask, then
      // take the Shannon entropy of the marginal (base-2).
      std::uint64_t buckets = 1;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        buckets *= p.cardinalities[static_cast<std::size_t>(
            std::countr_zero(rest))];
      }
      std::vector<double> marginal(buckets, 0.0);
      for (std::size_t j = 0; j < p.table.size(); ++j) {
        std::uint64_t key = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          std::size_t i =
              static_cast<std::size_t>(std::countr_zero(rest));
          std::uint64_t digit = (j / p.strides[i]) % p.cardinalities[i];
          key = key * p.cardinalities[i] + digit;
        }
        marginal[key] += p.table[j];
      }
      double h = 0.0;
      for (double q : marginal) {
        if (q > 0.0) h -= q * std::log2(q);
      }
      return Value::approx(h);
    }

    case Family::explicit_table:
      return std::get<ExplicitTableParams>(params_).values[mask];
  }
  throw Error("unreachable family");
}

std::vector<Value> materialized_values(const SetFunctionSpec& spec) {
  const GroundSetPtr& ground = spec.ground();
  require_width(ground, caps::kMaterialize, "materialization");
  const int n = ground->size();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Value> values(static_cast<std::size_t>(size));

  switch (spec.family()) {
    case Family::weighted_modular: {
      // values[m] = values[m without lowest bit] + weight(lowest bit)
      const auto& p = spec.weighted_modular_params();
      std::vector<Rational> sums(static_cast<std::size_t>(size));
      sums[0] = p.gamma;
      for (std::uint64_t m = 1; m < size; ++m) {
        sums[m] = sums[m & (m - 1)] +
                  p.weights[static_cast<std::size_t>(std::countr_zero(m))];
      }
      for (std::uint64_t m = 0; m < size; ++m) {
        values[m] = Value::exact(sums[m]);
      }
      return values;
    }

    case Family::budgeted_linear: {
      const auto& p = spec.budgeted_linear_params();
      std::vector<Rational> sums(static_cast<std::size_t>(size));
      sums[0] = 0;
      values[0] = Value::exact(Rational(0));
      for (std::uint64_t m = 1; m < size; ++m) {
        sums[m] = sums[m & (m - 1)] +
                  p.weights[static_cast<std::size_t>(std::countr_zero(m))];
        values[m] = Value::exact(sums[m] < p.budget ? sums[m] : p.budget);
      }
      return values;
    }

    case Family::bipartite_neighborhood: {
      const auto& p = spec.bipartite_params();
      const std::size_t wpl = static_cast<std::size_t>(p.words_per_left);
      std::vector<std::uint64_t> acc(static_cast<std::size_t>(size) * wpl, 0);
      values[0] = Value::exact(0L);
      for (std::uint64_t m = 1; m < size; ++m) {
        std::size_t low =
            static_cast<std::size_t>(std::countr_zero(m));
        int count = 0;
        for (std::size_t w = 0; w < wpl; ++w) {
          std::uint64_t word = acc[(m & (m - 1)) * wpl + w] |
                               p.words[low * wpl + w];
          acc[m * wpl + w] = word;
          count += std::popcount(word);
        }
        values[m] = Value::exact(count);
      }
      return values;
    }

    case Family::joint_entropy: {
      const auto& p = spec.joint_entropy_params();
      if (size * p.table.size() > kEntropyMaterializeWork) {
        throw CapExceeded("joint entropy materialization too large");
      }
      break;  // fall through to the generic per-mask loop
    }

    default:
      break;
  }

  for (std::uint64_t m = 0; m < size; ++m) {
    values[m] = spec.evaluate_mask(m);
  }
  return values;
}

SetFunctionSpec SetFunctionSpec::materialize() const {
  if (family_ == Family::explicit_table) return *this;
  return explicit_table(ground_, materialized_values(*this));
}

namespace {

const char* wrong_family(Family want, Family got) {
  static thread_local std::string message;
  message = std::string("requested ") + family_name(want) +
            " parameters from a " + family_name(got) + " function";
  return message.c_str();
}

}  // namespace

const WeightedModularParams& SetFunctionSpec::weighted_modular_params() const {
  if (family_ != Family::weighted_modular) {
    throw Error(wrong_family(Family::weighted_modular, family_));
  }
  return std::get<WeightedModularParams>(params_);
}

const BudgetedLinearParams& SetFunctionSpec::budgeted_linear_params() const {
  if (family_ != Family::budgeted_linear) {
    throw Error(wrong_family(Family::budgeted_linear, family_));
  }
  return std::get<BudgetedLinearParams>(params_);
}

const BipartiteNeighborhoodParams& SetFunctionSpec::bipartite_params() const {
  if (family_ != Family::bipartite_neighborhood) {
    throw Error(wrong_family(Family::bipartite_neighborhood, family_));
  }
  return std::get<BipartiteNeighborhoodParams>(params_);
}

const UniformMatroidRankParams& SetFunctionSpec::uniform_matroid_params()
    const {
  if (family_ != Family::uniform_matroid_rank) {
    throw Error(wrong_family(Family::uniform_matroid_rank, family_));
  }
  return std::get<UniformMatroidRankParams>(params_);
}

const PartitionMatroidRankParams& SetFunctionSpec::partition_matroid_params()
    const {
  if (family_ != Family::partition_matroid_rank) {
    throw Error(wrong_family(Family::partition_matroid_rank, family_));
  }
  return std::get<PartitionMatroidRankParams>(params_);
}

const JointEntropyParams& SetFunctionSpec::joint_entropy_params() const {
  if (family_ != Family::joint_entropy) {
    throw Error(wrong_family(Family::joint_entropy, family_));
  }
  return std::get<JointEntropyParams>(params_);
}

const ExplicitTableParams& SetFunctionSpec::explicit_table_params() const {
  if (family_ != Family::explicit_table) {
    throw Error(wrong_family(Family::explicit_table, family_));
  }
  return std::get<ExplicitTableParams>(params_);
}

namespace {

SubsetMask mask_of(const GroundSetPtr& ground, std::uint64_t bits) {
  return SubsetMask(ground, bits);
}

void push_violation(PropertyReport& report, ViolationRecord record) {
  report.verdict = Verdict::fails;
  if (static_cast<int>(report.violations.size()) < caps::kMaxWitnesses) {
    report.violations.push_back(std::move(record));
  }
}

std::vector<Value> property_scan_values(const SetFunctionSpec& spec,
                                        const char* op) {
  require_width(spec.ground(), caps::kPropertyScan, op);
  return materialized_values(spec);
}

void require_pair_scan(const SetFunctionSpec& spec, const char* op) {
  int cap = spec.is_approx() ? caps::kExhaustivePairsApprox
                             : caps::kExhaustivePairsExact;
  require_width(spec.ground(), cap, op);
}

}  // namespace

PropertyReport is_nonnegative(const SetFunctionSpec& spec, double epsilon) {
  std::vector<Value> f = property_scan_values(spec, "nonnegativity scan");
  PropertyReport report;
  const Value zero = spec.is_approx() ? Value::approx(0.0) : Value::exact(0L);
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    ++report.checked;
    if (f[m].is_negative(epsilon)) {
      push_violation(report,
                     ViolationRecord{ViolationKind::property,
                                     {mask_of(spec.ground(), m)},
                                     zero,
                                     f[m],
                                     zero - f[m]});
    }
  }
  return report;
}

PropertyReport is_monotone(const SetFunctionSpec& spec, double epsilon) {
  std::vector<Value> f = property_scan_values(spec, "monotonicity scan");
  PropertyReport report;
  const int n = spec.ground()->size();
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    for (int x = 0; x < n; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (m & bit) continue;
      ++report.checked;
      // Expect f(A) <= f(A + x).
      if (!f[m].leq(f[m | bit], epsilon)) {
        push_violation(report,
                       ViolationRecord{ViolationKind::property,
                                       {mask_of(spec.ground(), m),
                                        mask_of(spec.ground(), m | bit)},
                                       f[m],
                                       f[m | bit],
                                       f[m] - f[m | bit]});
      }
    }
  }
  return report;
}

PropertyReport is_submodular_pairwise(const SetFunctionSpec& spec,
                                      double epsilon) {
  require_pair_scan(spec, "pairwise submodularity scan");
  std::vector<Value> f = materialized_values(spec);
  PropertyReport report;
  const std::uint64_t size = f.size();
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      ++report.checked;
      // Expect f(A|B) + f(A&B) <= f(A) + f(B).
      Value lhs = f[a | b] + f[a & b];
      Value rhs = f[a] + f[b];
      if (!lhs.leq(rhs, epsilon)) {
        push_violation(report,
                       ViolationRecord{ViolationKind::property,
                                       {mask_of(spec.ground(), a),
                                        mask_of(spec.ground(), b)},
                                       lhs,
                                       rhs,
                                       lhs - rhs});
      }
    }
  }
  return report;
}

PropertyReport is_submodular_marginal(const SetFunctionSpec& spec,
                                      double epsilon) {
  std::vector<Value> f = property_scan_values(spec, "marginal submodularity scan");
  PropertyReport report;
  const int n = spec.ground()->size();
  const std::uint64_t size = f.size();
  // For every B, every A subseteq B, every x outside B, the marginal gain
  // of x may not grow with the context: f(A+x) - f(A) >= f(B+x) - f(B).
  for (std::uint64_t b = 0; b < size; ++b) {
    for (int x = 0; x < n; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (b & bit) continue;
      Value gain_b = f[b | bit] - f[b];
      // Enumerate subsets A of b, smallest first. The loop below walks the
      // sub-masks of b in descending order, so collect ascending manually.
      std::uint64_t a = 0;
      while (true) {
        ++report.checked;
        // Expect f(B+x) - f(B) <= f(A+x) - f(A).
        Value gain_a = f[a | bit] - f[a];
        if (!gain_b.leq(gain_a, epsilon)) {
          push_violation(
              report,
              ViolationRecord{ViolationKind::property,
                              {mask_of(spec.ground(), a),
                               mask_of(spec.ground(), b),
                               mask_of(spec.ground(), bit)},
                              gain_b,
                              gain_a,
                              gain_b - gain_a});
        }
        if (a == b) break;
        a = (a - b) & b;  // next sub-mask of b in ascending order
      }
    }
  }
  return report;
}

PropertyReport is_modular(const SetFunctionSpec& spec, double epsilon) {
  require_pair_scan(spec, "modularity scan");
  std::vector<Value> f = materialized_values(spec);
  PropertyReport report;
  const std::uint64_t size = f.size();
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      ++report.checked;
      Value lhs = f[a | b] + f[a & b];
      Value rhs = f[a] + f[b];
      if (!lhs.eq(rhs, epsilon)) {
        // Normalize so margin = |lhs - rhs| > 0.
        bool lhs_high = rhs < lhs;
        push_violation(report,
                       ViolationRecord{ViolationKind::property,
                                       {mask_of(spec.ground(), a),
                                        mask_of(spec.ground(), b)},
                                       lhs_high ? lhs : rhs,
                                       lhs_high ? rhs : lhs,
                                       lhs_high ? lhs - rhs : rhs - lhs});
      }
    }
  }
  return report;
}

SetFunctionSpec random_monotone_function(GroundSetPtr ground,
                                         std::uint64_t seed, RandomMode mode) {
  require_width(ground, caps::kRandomTable, "random table generation");
  const int n = ground->size();
  const std::uint64_t size = std::uint64_t{1} << n;
  // mt19937_64 output is pinned by the standard, and the modulo keeps the
  // draw sequence platform-independent (std::uniform_int_distribution is
  // not). The slight bias of the modulo is irrelevant here.
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    return static_cast<long>(rng() %
                             static_cast<std::uint64_t>(caps::kGeneratorMax + 1));
  };

  std::vector<Value> values(static_cast<std::size_t>(size));
  if (mode == RandomMode::modular) {
    Rational gamma(draw());
    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) weights.emplace_back(draw());
    std::vector<Rational> sums(static_cast<std::size_t>(size));
    sums[0] = gamma;
    values[0] = Value::exact(gamma);
    for (std::uint64_t m = 1; m < size; ++m) {
      sums[m] = sums[m & (m - 1)] +
                weights[static_cast<std::size_t>(std::countr_zero(m))];
      values[m] = Value::exact(sums[m]);
    }
  } else {
    // Raw draws in ascending mask order, then the monotone closure:
    // f(A) = max(raw(A), max over x in A of f(A - x)).
    std::vector<Rational> closure(static_cast<std::size_t>(size));
    for (std::uint64_t m = 0; m < size; ++m) {
      Rational v(draw());
      for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
        std::uint64_t below = m ^ (rest & -rest);
        if (closure[below] > v) v = closure[below];
      }
      closure[m] = v;
      values[m] = Value::exact(closure[m]);
    }
  }
  return SetFunctionSpec::explicit_table(std::move(ground), std::move(values));
}

}  // namespace subjaccard
