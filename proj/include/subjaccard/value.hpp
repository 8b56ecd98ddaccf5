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

#include <string>

#include "subjaccard/rational.hpp"

namespace subjaccard {

// Scalar codomain of a set function: either an exact rational or a
// double with a caller-supplied tolerance. The two modes never mix —
// combining or comparing an exact value with an approximate one throws
// MixedModeError rather than silently coercing.
class Value {
 public:
  // Exact zero.
  Value();

  static Value exact(Rational r);
  static Value exact(long n);
  static Value approx(double d);

  bool is_exact() const { return exact_; }

  // Throws MixedModeError when called on the wrong mode.
  const Rational& rat() const;
  double num() const;

  // Lossy view for display/estimation; valid in both modes.
  double as_double() const;

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator*(const Value& o) const;
  // Caller guards division by zero; exact 0 denominator throws Error.
  Value operator/(const Value& o) const;

  // Raw mode-checked comparisons, no tolerance.
  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const;
  bool operator<=(const Value& o) const;
  bool operator>(const Value& o) const { return o < *this; }
  bool operator>=(const Value& o) const { return o <= *this; }

  // Tolerance-aware predicates. Exact mode ignores eps entirely; approx
  // mode treats differences within eps as ties, so a comparison only
  // *fails* when it fails by more than eps.
  bool eq(const Value& o, double eps) const;
  bool leq(const Value& o, double eps) const;
  bool is_zero(double eps) const;
  // Strictly below zero by more than eps (exact: simply < 0).
  bool is_negative(double eps) const;

  // Canonical text: reduced "p/q"/"p" in exact mode, shortest
  // round-tripping decimal in approx mode.
  std::string str() const;

 private:
  bool exact_;
  Rational rat_;
  double num_;
};

}  // namespace subjaccard
