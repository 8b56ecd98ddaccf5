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
#include <iterator>
#include <string>
#include <vector>

#include "subjaccard/ground_set.hpp"

namespace subjaccard {

// A subset of a ground set, stored as one bit per element. All binary
// operations require both operands to share the ground set (same object or
// identical label sequence) and throw GroundMismatch otherwise.
class SubsetMask {
 public:
  // The empty subset.
  explicit SubsetMask(GroundSetPtr ground);
  // Bits outside the ground set's width must be zero (Error otherwise).
  SubsetMask(GroundSetPtr ground, std::uint64_t bits);

  // Subset from labels; throws UnknownLabel for foreign labels and
  // ParseError when a label repeats.
  static SubsetMask of_labels(GroundSetPtr ground,
                              const std::vector<std::string>& labels);

  // Parses the canonical text encoding: "-" for the empty set, otherwise
  // comma-separated labels ("a,c"). Whitespace is not trimmed.
  static SubsetMask parse(GroundSetPtr ground, const std::string& text);

  const GroundSetPtr& ground() const { return ground_; }
  std::uint64_t bits() const { return bits_; }

  int cardinality() const;
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == ground_->full_mask(); }

  bool contains(int index) const;
  bool contains(const std::string& label) const;

  SubsetMask with(int index) const;
  SubsetMask without(int index) const;

  // Member labels in ground-set order.
  std::vector<std::string> to_labels() const;
  // Canonical text encoding; inverse of parse.
  std::string to_string() const;

  // Same ground set and same bits.
  bool operator==(const SubsetMask& o) const;
  bool operator!=(const SubsetMask& o) const { return !(*this == o); }

 private:
  GroundSetPtr ground_;
  std::uint64_t bits_;
};

SubsetMask set_union(const SubsetMask& a, const SubsetMask& b);
SubsetMask set_intersection(const SubsetMask& a, const SubsetMask& b);
SubsetMask sym_difference(const SubsetMask& a, const SubsetMask& b);
SubsetMask complement(const SubsetMask& a);
bool is_subset(const SubsetMask& a, const SubsetMask& b);
// a subseteq b or b subseteq a.
bool is_comparable(const SubsetMask& a, const SubsetMask& b);

// Iterates the full power set in ascending mask order: the empty set
// first, the full set last. Construction throws CapExceeded when the
// ground set exceeds the enumeration cap.
class SubsetRange {
 public:
  class iterator {
   public:
    using value_type = SubsetMask;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(GroundSetPtr ground, std::uint64_t position)
        : ground_(std::move(ground)), position_(position) {}

    SubsetMask operator*() const { return SubsetMask(ground_, position_); }
    iterator& operator++() {
      ++position_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++position_;
      return tmp;
    }
    bool operator==(const iterator& o) const {
      return position_ == o.position_;
    }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    GroundSetPtr ground_;
    std::uint64_t position_;
  };

  explicit SubsetRange(GroundSetPtr ground);

  iterator begin() const { return iterator(ground_, 0); }
  iterator end() const { return iterator(ground_, count_); }
  std::uint64_t size() const { return count_; }

 private:
  GroundSetPtr ground_;
  std::uint64_t count_;
};

SubsetRange enumerate_subsets(GroundSetPtr ground);

}  // namespace subjaccard
