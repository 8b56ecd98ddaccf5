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

#include "subjaccard/jaccard.hpp"

#include <bit>

#include "subjaccard/errors.hpp"

namespace subjaccard {

namespace {

Value zero_like(const Value& v) {
  return v.is_exact() ? Value::exact(0L) : Value::approx(0.0);
}

Value one_like(const Value& v) {
  return v.is_exact() ? Value::exact(1L) : Value::approx(1.0);
}

}  // namespace

Rational jaccard_index(const SubsetMask& a, const SubsetMask& b) {
  std::uint64_t union_bits = set_union(a, b).bits();
  if (union_bits == 0) return Rational(1);
  return make_rational(std::popcount(a.bits() & b.bits()),
                       std::popcount(union_bits));
}

Rational jaccard_distance(const SubsetMask& a, const SubsetMask& b) {
  std::uint64_t union_bits = set_union(a, b).bits();
  if (union_bits == 0) return Rational(0);
  return make_rational(std::popcount(a.bits() ^ b.bits()),
                       std::popcount(union_bits));
}

Value cap_distance_values(const Value& f_intersection, const Value& f_union,
                          double epsilon) {
  if (f_intersection.is_negative(epsilon)) {
    throw PropertyViolation("f(A&B) is negative: " + f_intersection.str());
  }
  if (f_union.is_negative(epsilon)) {
    throw PropertyViolation("f(A|B) is negative: " + f_union.str());
  }
  if (!f_intersection.leq(f_union, epsilon)) {
    throw PropertyViolation("f(A&B) = " + f_intersection.str() +
                            " exceeds f(A|B) = " + f_union.str());
  }
  if (f_union.is_zero(epsilon)) return zero_like(f_union);
  return (f_union - f_intersection) / f_union;
}

Value delta_distance_values(const Value& f_sym_difference,
                            const Value& f_empty, const Value& f_union,
                            double epsilon) {
  if (f_sym_difference.is_negative(epsilon)) {
    throw PropertyViolation("f(A^B) is negative: " + f_sym_difference.str());
  }
  if (f_empty.is_negative(epsilon)) {
    throw PropertyViolation("f(empty) is negative: " + f_empty.str());
  }
  if (f_union.is_negative(epsilon)) {
    throw PropertyViolation("f(A|B) is negative: " + f_union.str());
  }
  if (!f_empty.leq(f_sym_difference, epsilon)) {
    throw PropertyViolation("f(A^B) = " + f_sym_difference.str() +
                            " is below f(empty) = " + f_empty.str());
  }
  if (f_union.is_zero(epsilon)) return zero_like(f_union);
  return (f_sym_difference - f_empty) / f_union;
}

Value sub_jaccard_cap(const SetFunctionSpec& f, const SubsetMask& a,
                      const SubsetMask& b, double epsilon) {
  return cap_distance_values(f.evaluate(set_intersection(a, b)),
                             f.evaluate(set_union(a, b)), epsilon);
}

Value sub_jaccard_delta(const SetFunctionSpec& f, const SubsetMask& a,
                        const SubsetMask& b, double epsilon) {
  return delta_distance_values(f.evaluate(sym_difference(a, b)),
                               f.evaluate_mask(0),
                               f.evaluate(set_union(a, b)), epsilon);
}

Value sub_jaccard_index(const SetFunctionSpec& f, const SubsetMask& a,
                        const SubsetMask& b, double epsilon) {
  Value delta = sub_jaccard_delta(f, a, b, epsilon);
  return one_like(delta) - delta;
}

WeightedVector WeightedVector::exact(std::vector<Rational> entries) {
  for (const Rational& e : entries) {
    if (e < 0) {
      throw NegativeEntry("negative vector entry: " + rational_to_string(e));
    }
  }
  WeightedVector v;
  v.exact_ = true;
  v.exact_entries_ = std::move(entries);
  return v;
}

WeightedVector WeightedVector::approx(std::vector<double> entries,
                                      double epsilon) {
  for (double e : entries) {
    if (e < -epsilon || e != e) {
      throw NegativeEntry("negative or non-finite vector entry");
    }
  }
  WeightedVector v;
  v.exact_ = false;
  v.approx_entries_ = std::move(entries);
  return v;
}

WeightedVector WeightedVector::indicator(const SubsetMask& subset) {
  std::vector<Rational> entries(
      static_cast<std::size_t>(subset.ground()->size()), Rational(0));
  for (std::uint64_t rest = subset.bits(); rest != 0; rest &= rest - 1) {
    entries[static_cast<std::size_t>(std::countr_zero(rest))] = 1;
  }
  return exact(std::move(entries));
}

std::size_t WeightedVector::size() const {
  return exact_ ? exact_entries_.size() : approx_entries_.size();
}

Value WeightedVector::at(std::size_t i) const {
  if (i >= size()) throw Error("vector index out of range");
  return exact_ ? Value::exact(exact_entries_[i])
                : Value::approx(approx_entries_[i]);
}

Value vector_jaccard_distance(const WeightedVector& x, const WeightedVector& y,
                              double epsilon) {
  if (x.is_exact() != y.is_exact()) {
    throw MixedModeError("cannot mix an exact and an approximate vector");
  }
  if (x.size() != y.size()) {
    throw LengthMismatch("vector lengths differ: " + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()));
  }
  Value min_sum = x.is_exact() ? Value::exact(0L) : Value::approx(0.0);
  Value max_sum = min_sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Value xi = x.at(i);
    Value yi = y.at(i);
    if (xi <= yi) {
      min_sum = min_sum + xi;
      max_sum = max_sum + yi;
    } else {
      min_sum = min_sum + yi;
      max_sum = max_sum + xi;
    }
  }
  if (max_sum.is_zero(epsilon)) return zero_like(max_sum);
  return (max_sum - min_sum) / max_sum;
}

Rational multiset_jaccard_distance(const Multiset& a, const Multiset& b) {
  for (const Multiset* ms : {&a, &b}) {
    for (const auto& [label, count] : *ms) {
      if (count < 0) {
        throw NegativeEntry("negative multiplicity for '" + label +
                            "': " + std::to_string(count));
      }
    }
  }
  // Walk the union of supports in lexicographic order (std::map order).
  long long min_sum = 0;
  long long max_sum = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  auto take = [&](long long ca, long long cb) {
    min_sum += ca < cb ? ca : cb;
    max_sum += ca < cb ? cb : ca;
  };
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      take(ia->second, 0);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      take(0, ib->second);
      ++ib;
    } else {
      take(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  if (max_sum == 0) return Rational(0);
  return make_rational(max_sum - min_sum, max_sum);
}

}  // namespace subjaccard
