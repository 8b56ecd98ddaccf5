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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subjaccard {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two masks (or a mask and a function spec) belong to different ground sets.
class GroundMismatch : public Error {
 public:
  using Error::Error;
};

// An operation would exceed a hard size cap (enumeration width,
// materialization width, exhaustive pair/triple scan width, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A function specification violates its own structural invariants
// (wrong table size, overlapping partition blocks, negative budget, ...).
class MalformedSpec : public Error {
 public:
  using Error::Error;
};

// Exact and approximate values were combined in one expression.
class MixedModeError : public Error {
 public:
  using Error::Error;
};

// Two vectors of different lengths were combined.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// A weight, count, or probability that must be nonnegative is negative.
class NegativeEntry : public Error {
 public:
  using Error::Error;
};

// A label that is not part of the ground set (or of a declared label
// universe) was referenced.
class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label: '" + label + "'"), label_(label) {}

  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// Text (command-line argument, JSON document, number literal) could not be
// parsed into the requested shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Evidence surfaced during evaluation that the oracle breaks an assumption
// a formula relies on: a negative value, f(intersection) > f(union), or
// f(symmetric difference) < f(empty set).
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

// A check's hypotheses are not met by the supplied function; carries the
// names of the failing properties so callers can report them.
class PrereqFailed : public Error {
 public:
  explicit PrereqFailed(std::vector<std::string> failed)
      : Error(format_message(failed)), failed_properties_(std::move(failed)) {}

  const std::vector<std::string>& failed_properties() const {
    return failed_properties_;
  }

 private:
  static std::string format_message(const std::vector<std::string>& failed) {
    std::string msg = "prerequisite properties do not hold:";
    for (const std::string& name : failed) {
      msg += ' ';
      msg += name;
    }
    return msg;
  }

  std::vector<std::string> failed_properties_;
};

}  // namespace subjaccard
