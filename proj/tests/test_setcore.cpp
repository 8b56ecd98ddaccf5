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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "subjaccard/errors.hpp"
#include "subjaccard/ground_set.hpp"
#include "subjaccard/rational.hpp"
#include "subjaccard/subset_mask.hpp"
#include "subjaccard/value.hpp"

#include "oracle.hpp"

using namespace subjaccard;

TEST_CASE("ground set basics") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c"});
  CHECK(g->size() == 3);
  CHECK(g->labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g->label(0) == "a");
  CHECK(g->label(2) == "c");
  CHECK(g->index_of("b") == 1);
  CHECK(g->contains("c"));
  CHECK(!g->contains("d"));
  CHECK(g->full_mask() == 0b111);
}

TEST_CASE("ground set rejects malformed label sets") {
  CHECK_THROWS_AS(GroundSet::create({}), MalformedSpec);
  CHECK_THROWS_AS(GroundSet::create({"a", "a"}), MalformedSpec);
  CHECK_THROWS_AS(GroundSet::create({""}), MalformedSpec);
  CHECK_THROWS_AS(GroundSet::create({"a,b"}), MalformedSpec);
  CHECK_THROWS_AS(GroundSet::create({"-"}), MalformedSpec);
  std::vector<std::string> too_many;
  for (int i = 0; i < 65; ++i) too_many.push_back("e" + std::to_string(i));
  CHECK_THROWS_AS(GroundSet::create(too_many), MalformedSpec);
}

TEST_CASE("ground set at the width limit") {
  GroundSetPtr g = oracle::numbered_ground(64, "e");
  CHECK(g->size() == 64);
  CHECK(g->full_mask() == ~std::uint64_t{0});
}

TEST_CASE("unknown labels raise and carry the label") {
  GroundSetPtr g = oracle::ground_of({"a", "b"});
  CHECK_THROWS_AS(g->index_of("z"), UnknownLabel);
  try {
    g->index_of("z");
  } catch (const UnknownLabel& e) {
    CHECK(e.label() == "z");
  }
}

TEST_CASE("ground sets with identical label sequences are interchangeable") {
  GroundSetPtr g1 = oracle::ground_of({"a", "b"});
  GroundSetPtr g2 = oracle::ground_of({"a", "b"});
  GroundSetPtr g3 = oracle::ground_of({"b", "a"});
  CHECK(g1->same_as(*g2));
  CHECK(!g1->same_as(*g3));
  SubsetMask m1 = SubsetMask::parse(g1, "a");
  SubsetMask m2 = SubsetMask::parse(g2, "b");
  CHECK(set_union(m1, m2).to_string() == "a,b");
  SubsetMask m3 = SubsetMask::parse(g3, "a");
  CHECK_THROWS_AS(set_union(m1, m3), GroundMismatch);
}

TEST_CASE("subset mask construction and encoding") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c"});
  SubsetMask empty(g);
  CHECK(empty.bits() == 0);
  CHECK(empty.empty());
  CHECK(empty.to_string() == "-");
  CHECK(empty.to_labels().empty());

  SubsetMask ac(g, 0b101);
  CHECK(ac.cardinality() == 2);
  CHECK(ac.contains("a"));
  CHECK(!ac.contains("b"));
  CHECK(ac.contains(2));
  CHECK(ac.to_string() == "a,c");
  CHECK(ac.to_labels() == std::vector<std::string>{"a", "c"});

  CHECK(SubsetMask(g, 0b111).is_full());
  CHECK_THROWS_AS(SubsetMask(g, 0b1000), Error);
}

TEST_CASE("subset mask parse is the inverse of to_string") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c"});
  CHECK(SubsetMask::parse(g, "-").bits() == 0);
  CHECK(SubsetMask::parse(g, "a,c").bits() == 0b101);
  CHECK(SubsetMask::parse(g, "c,a").to_string() == "a,c");
  CHECK(SubsetMask::parse(g, "b").bits() == 0b010);
  for (std::uint64_t m = 0; m < 8; ++m) {
    SubsetMask s(g, m);
    CHECK(SubsetMask::parse(g, s.to_string()) == s);
  }
}

TEST_CASE("subset mask parse rejects malformed encodings") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c"});
  CHECK_THROWS_AS(SubsetMask::parse(g, ""), ParseError);
  CHECK_THROWS_AS(SubsetMask::parse(g, "a,,b"), ParseError);
  CHECK_THROWS_AS(SubsetMask::parse(g, "a,"), ParseError);
  CHECK_THROWS_AS(SubsetMask::parse(g, "a,a"), ParseError);
  CHECK_THROWS_AS(SubsetMask::parse(g, "z"), UnknownLabel);
  CHECK_THROWS_AS(SubsetMask::parse(g, " a"), UnknownLabel);
  CHECK_THROWS_AS(SubsetMask::of_labels(g, {"a", "a"}), ParseError);
  CHECK_THROWS_AS(SubsetMask::of_labels(g, {"q"}), UnknownLabel);
}

TEST_CASE("subset algebra matches definitions") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c", "d"});
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t y = 0; y < 16; ++y) {
      SubsetMask a(g, x);
      SubsetMask b(g, y);
      CHECK(set_union(a, b).bits() == (x | y));
      CHECK(set_intersection(a, b).bits() == (x & y));
      CHECK(sym_difference(a, b).bits() == (x ^ y));
      CHECK(is_subset(a, b) == ((x & ~y) == 0));
      CHECK(is_comparable(a, b) == (((x & ~y) == 0) || ((y & ~x) == 0)));
    }
    CHECK(complement(SubsetMask(g, x)).bits() == (~x & 0xF));
  }
}

TEST_CASE("with/without toggle single elements") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c"});
  SubsetMask s(g, 0b001);
  CHECK(s.with(2).bits() == 0b101);
  CHECK(s.with(0).bits() == 0b001);
  CHECK(s.without(0).bits() == 0);
  CHECK(s.without(1).bits() == 0b001);
}

TEST_CASE("subset enumeration is ascending and capped") {
  GroundSetPtr g = oracle::ground_of({"a", "b", "c"});
  SubsetRange range = enumerate_subsets(g);
  CHECK(range.size() == 8);
  std::uint64_t expected = 0;
  for (const SubsetMask& s : range) {
    CHECK(s.bits() == expected);
    ++expected;
  }
  CHECK(expected == 8);

  GroundSetPtr big = oracle::numbered_ground(21, "e");
  CHECK_THROWS_AS(enumerate_subsets(big), CapExceeded);
  GroundSetPtr at_cap = oracle::numbered_ground(20, "e");
  CHECK(enumerate_subsets(at_cap).size() == (std::uint64_t{1} << 20));
}

TEST_CASE("make_rational reduces and normalizes sign") {
  CHECK(rational_to_string(make_rational(4, 6)) == "2/3");
  CHECK(rational_to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(rational_to_string(make_rational(4, -6)) == "-2/3");
  CHECK(rational_to_string(make_rational(-4, -6)) == "2/3");
  CHECK(rational_to_string(make_rational(0, 5)) == "0");
  CHECK(rational_to_string(make_rational(7)) == "7");
  CHECK_THROWS_AS(make_rational(1, 0), ParseError);
}

TEST_CASE("rational_from_string accepts canonical forms") {
  CHECK(rational_from_string("42") == make_rational(42));
  CHECK(rational_from_string("-7") == make_rational(-7));
  CHECK(rational_from_string("0") == make_rational(0));
  CHECK(rational_from_string("3/4") == make_rational(3, 4));
  CHECK(rational_from_string("-9/6") == make_rational(-3, 2));
  CHECK(rational_from_string("0.25") == make_rational(1, 4));
  CHECK(rational_from_string("-1.5") == make_rational(-3, 2));
  CHECK(rational_from_string("2.50") == make_rational(5, 2));
  CHECK(rational_from_string("0.0") == make_rational(0));
  CHECK(rational_from_string("10") == make_rational(10));
}

TEST_CASE("rational_from_string rejects everything else") {
  for (const char* bad : {"", "+3", "1/0", "abc", "1.2.3", "1/2/3", " 1",
                          "1 ", "1e3", "0x10", "--1", "1.", ".5", "/2", "3/",
                          "-", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(rational_from_string(bad), ParseError);
  }
}

TEST_CASE("rational round-trips through its string form") {
  for (const char* text : {"0", "1", "-1", "2/3", "-17/5", "1000000007"}) {
    CHECK(rational_to_string(rational_from_string(text)) == text);
  }
  // Non-canonical inputs normalize, then round-trip as fixed points.
  Rational r = rational_from_string("0.125");
  CHECK(rational_to_string(r) == "1/8");
  CHECK(rational_from_string(rational_to_string(r)) == r);
}

TEST_CASE("exact values do exact arithmetic") {
  Value a = Value::exact(make_rational(2, 3));
  Value b = Value::exact(make_rational(1, 6));
  CHECK((a + b).rat() == make_rational(5, 6));
  CHECK((a - b).rat() == make_rational(1, 2));
  CHECK((a * b).rat() == make_rational(1, 9));
  CHECK((a / b).rat() == make_rational(4));
  CHECK(a.is_exact());
  CHECK(a.str() == "2/3");
  CHECK(Value::exact(4).str() == "4");
  CHECK(Value().rat() == 0);
  CHECK_THROWS_AS(a / Value::exact(0), Error);
}

TEST_CASE("approximate values carry doubles") {
  Value a = Value::approx(0.75);
  Value b = Value::approx(0.25);
  CHECK(!a.is_exact());
  CHECK((a + b).num() == doctest::Approx(1.0));
  CHECK((a * b).num() == doctest::Approx(0.1875));
  CHECK(a.as_double() == doctest::Approx(0.75));
  CHECK(Value::approx(0.5).str() == "0.5");
}

TEST_CASE("modes never mix") {
  Value e = Value::exact(1);
  Value d = Value::approx(1.0);
  CHECK_THROWS_AS(e + d, MixedModeError);
  CHECK_THROWS_AS(e - d, MixedModeError);
  CHECK_THROWS_AS(e * d, MixedModeError);
  CHECK_THROWS_AS(e / d, MixedModeError);
  CHECK_THROWS_AS((void)(e == d), MixedModeError);
  CHECK_THROWS_AS((void)(e < d), MixedModeError);
  CHECK_THROWS_AS((void)e.eq(d, 1e-9), MixedModeError);
  CHECK_THROWS_AS((void)d.rat(), MixedModeError);
  CHECK_THROWS_AS((void)e.num(), MixedModeError);
}

TEST_CASE("exact comparisons ignore the tolerance") {
  Value a = Value::exact(make_rational(1, 1000000000));
  Value zero = Value::exact(0);
  CHECK(!a.eq(zero, 1.0));
  CHECK(zero.leq(a, 0.0));
  CHECK(!a.leq(zero, 1.0));
  CHECK(zero.is_zero(0.0));
  CHECK(!a.is_zero(1.0));
  CHECK(Value::exact(-1).is_negative(100.0));
  CHECK(!zero.is_negative(0.0));
}

TEST_CASE("approximate comparisons fail only beyond the tolerance") {
  double eps = 1e-9;
  Value a = Value::approx(1.0);
  CHECK(a.eq(Value::approx(1.0 + 1e-10), eps));
  CHECK(!a.eq(Value::approx(1.0 + 1e-6), eps));
  CHECK(a.leq(Value::approx(1.0 - 1e-10), eps));  // within eps: a tie
  CHECK(!Value::approx(1.1).leq(a, eps));
  CHECK(Value::approx(1e-12).is_zero(eps));
  CHECK(!Value::approx(1e-6).is_zero(eps));
  CHECK(!Value::approx(-1e-12).is_negative(eps));
  CHECK(Value::approx(-1e-3).is_negative(eps));
}
