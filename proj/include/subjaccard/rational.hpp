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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace subjaccard {

// Arbitrary-precision rational. All construction must go through the
// helpers below: the underlying two-argument constructor does not reduce
// fractions, and unreduced representations would leak into comparisons,
// string output, and digests.
using Rational = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
// Throws ParseError if den == 0.
Rational make_rational(long num, long den = 1);

// Accepts an optionally signed integer ("42", "-7"), fraction ("3/4",
// "-9/6" -> "-3/2"), or decimal ("0.25", "-1.5") and returns the reduced
// rational. Anything else (including a zero denominator) throws ParseError.
Rational rational_from_string(const std::string& text);

// Canonical rendering: "p/q" in lowest terms with q > 1, plain "p" when the
// value is an integer. The inverse of rational_from_string on its output.
std::string rational_to_string(const Rational& value);

}  // namespace subjaccard
