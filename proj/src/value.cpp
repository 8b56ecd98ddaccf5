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

#include "subjaccard/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "subjaccard/errors.hpp"

namespace subjaccard {

namespace {

void require_same_mode(const Value& a, const Value& b) {
  if (a.is_exact() != b.is_exact()) {
    throw MixedModeError("cannot combine exact and approximate values");
  }
}

}  // namespace

Value::Value() : exact_(true), rat_(0), num_(0.0) {}

Value Value::exact(Rational r) {
  Value v;
  v.exact_ = true;
  v.rat_ = std::move(r);
  return v;
}

Value Value::exact(long n) { return exact(Rational(n)); }

Value Value::approx(double d) {
  Value v;
  v.exact_ = false;
  v.rat_ = 0;
  v.num_ = d;
  return v;
}

const Rational& Value::rat() const {
  if (!exact_) throw MixedModeError("approximate value has no exact form");
  return rat_;
}

double Value::num() const {
  if (exact_) throw MixedModeError("exact value has no approximate form");
  return num_;
}

double Value::as_double() const { return exact_ ? rat_.get_d() : num_; }

Value Value::operator+(const Value& o) const {
  require_same_mode(*this, o);
  return exact_ ? exact(rat_ + o.rat_) : approx(num_ + o.num_);
}

Value Value::operator-(const Value& o) const {
  require_same_mode(*this, o);
  return exact_ ? exact(rat_ - o.rat_) : approx(num_ - o.num_);
}

Value Value::operator*(const Value& o) const {
  require_same_mode(*this, o);
  return exact_ ? exact(rat_ * o.rat_) : approx(num_ * o.num_);
}

Value Value::operator/(const Value& o) const {
  require_same_mode(*this, o);
  if (exact_) {
    if (o.rat_ == 0) throw Error("division by exact zero");
    return exact(rat_ / o.rat_);
  }
  return approx(num_ / o.num_);
}

bool Value::operator==(const Value& o) const {
  require_same_mode(*this, o);
  return exact_ ? rat_ == o.rat_ : num_ == o.num_;
}

bool Value::operator<(const Value& o) const {
  require_same_mode(*this, o);
  return exact_ ? rat_ < o.rat_ : num_ < o.num_;
}

bool Value::operator<=(const Value& o) const {
  require_same_mode(*this, o);
  return exact_ ? rat_ <= o.rat_ : num_ <= o.num_;
}

bool Value::eq(const Value& o, double eps) const {
  require_same_mode(*this, o);
  if (exact_) return rat_ == o.rat_;
  return std::fabs(num_ - o.num_) <= eps;
}

bool Value::leq(const Value& o, double eps) const {
  require_same_mode(*this, o);
  if (exact_) return rat_ <= o.rat_;
  return num_ <= o.num_ + eps;
}

bool Value::is_zero(double eps) const {
  if (exact_) return rat_ == 0;
  return std::fabs(num_) <= eps;
}

bool Value::is_negative(double eps) const {
  if (exact_) return rat_ < 0;
  return num_ < -eps;
}

std::string Value::str() const {
  if (exact_) return rational_to_string(rat_);
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), num_);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", num_);
    return buf;
  }
  return std::string(buf, end);
}

}  // namespace subjaccard
