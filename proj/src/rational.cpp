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

#include "subjaccard/rational.hpp"

#include <cctype>
#include <cstddef>

#include "subjaccard/errors.hpp"

namespace subjaccard {

namespace {

bool is_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty number literal");
  std::size_t start = (text[0] == '-') ? 1 : 0;

  std::size_t slash = text.find('/');
  std::size_t dot = text.find('.');
  if (slash != std::string::npos && dot != std::string::npos) {
    throw ParseError("malformed number literal: '" + text + "'");
  }

  if (slash != std::string::npos) {
    // "p/q" with integer p and positive integer q.
    if (!is_digits(text, start, slash) ||
        !is_digits(text, slash + 1, text.size())) {
      throw ParseError("malformed fraction literal: '" + text + "'");
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
      throw ParseError("malformed fraction literal: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
      throw ParseError("fraction with zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
  }

  if (dot != std::string::npos) {
    // "d.dd" -> numerator over a power of ten.
    if (!is_digits(text, start, dot) ||
        !is_digits(text, dot + 1, text.size())) {
      throw ParseError("malformed decimal literal: '" + text + "'");
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0) {
      throw ParseError("malformed decimal literal: '" + text + "'");
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (!is_digits(text, start, text.size())) {
    throw ParseError("malformed integer literal: '" + text + "'");
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
    throw ParseError("malformed integer literal: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace subjaccard
