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

#include "subjaccard/subset_mask.hpp"

#include <bit>

#include "subjaccard/errors.hpp"
#include "subjaccard/limits.hpp"

namespace subjaccard {

namespace {

void require_ground(const GroundSetPtr& ground) {
  if (!ground) throw Error("null ground set");
}

void require_same_ground(const SubsetMask& a, const SubsetMask& b) {
  if (a.ground() == b.ground()) return;
  if (!a.ground()->same_as(*b.ground())) {
    throw GroundMismatch("operands use different ground sets");
  }
}

}  // namespace

SubsetMask::SubsetMask(GroundSetPtr ground)
    : ground_(std::move(ground)), bits_(0) {
  require_ground(ground_);
}

SubsetMask::SubsetMask(GroundSetPtr ground, std::uint64_t bits)
    : ground_(std::move(ground)), bits_(bits) {
  require_ground(ground_);
  if ((bits_ & ~ground_->full_mask()) != 0) {
    throw Error("mask has bits outside the ground set");
  }
}

SubsetMask SubsetMask::of_labels(GroundSetPtr ground,
                                 const std::vector<std::string>& labels) {
  require_ground(ground);
  std::uint64_t bits = 0;
  for (const std::string& label : labels) {
    std::uint64_t bit = std::uint64_t{1} << ground->index_of(label);
    if (bits & bit) throw ParseError("label repeats in subset: '" + label + "'");
    bits |= bit;
  }
  return SubsetMask(std::move(ground), bits);
}

SubsetMask SubsetMask::parse(GroundSetPtr ground, const std::string& text) {
  require_ground(ground);
  if (text.empty()) throw ParseError("empty subset encoding");
  if (text == "-") return SubsetMask(std::move(ground));

  std::vector<std::string> labels;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
    if (piece.empty()) {
      throw ParseError("empty label in subset encoding: '" + text + "'");
    }
    labels.push_back(std::move(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return of_labels(std::move(ground), labels);
}

int SubsetMask::cardinality() const { return std::popcount(bits_); }

bool SubsetMask::contains(int index) const {
  if (index < 0 || index >= ground_->size()) {
    throw Error("element index out of range: " + std::to_string(index));
  }
  return (bits_ >> index) & 1;
}

bool SubsetMask::contains(const std::string& label) const {
  return contains(ground_->index_of(label));
}

SubsetMask SubsetMask::with(int index) const {
  if (index < 0 || index >= ground_->size()) {
    throw Error("element index out of range: " + std::to_string(index));
  }
  return SubsetMask(ground_, bits_ | (std::uint64_t{1} << index));
}

SubsetMask SubsetMask::without(int index) const {
  if (index < 0 || index >= ground_->size()) {
    throw Error("element index out of range: " + std::to_string(index));
  }
  return SubsetMask(ground_, bits_ & ~(std::uint64_t{1} << index));
}

std::vector<std::string> SubsetMask::to_labels() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(ground_->label(std::countr_zero(rest)));
  }
  return out;
}

std::string SubsetMask::to_string() const {
  if (bits_ == 0) return "-";
  std::string out;
  bool first = true;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    if (!first) out += ',';
    out += ground_->label(std::countr_zero(rest));
    first = false;
  }
  return out;
}

bool SubsetMask::operator==(const SubsetMask& o) const {
  require_same_ground(*this, o);
  return bits_ == o.bits_;
}

SubsetMask set_union(const SubsetMask& a, const SubsetMask& b) {
  require_same_ground(a, b);
  return SubsetMask(a.ground(), a.bits() | b.bits());
}

SubsetMask set_intersection(const SubsetMask& a, const SubsetMask& b) {
  require_same_ground(a, b);
  return SubsetMask(a.ground(), a.bits() & b.bits());
}

SubsetMask sym_difference(const SubsetMask& a, const SubsetMask& b) {
  require_same_ground(a, b);
  return SubsetMask(a.ground(), a.bits() ^ b.bits());
}

SubsetMask complement(const SubsetMask& a) {
  return SubsetMask(a.ground(), ~a.bits() & a.ground()->full_mask());
}

bool is_subset(const SubsetMask& a, const SubsetMask& b) {
  require_same_ground(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

bool is_comparable(const SubsetMask& a, const SubsetMask& b) {
  return is_subset(a, b) || is_subset(b, a);
}

SubsetRange::SubsetRange(GroundSetPtr ground) : ground_(std::move(ground)) {
  require_ground(ground_);
  if (ground_->size() > caps::kEnumerate) {
    throw CapExceeded("power-set enumeration capped at 2^" +
                      std::to_string(caps::kEnumerate) + " subsets, got n=" +
                      std::to_string(ground_->size()));
  }
  count_ = std::uint64_t{1} << ground_->size();
}

SubsetRange enumerate_subsets(GroundSetPtr ground) {
  return SubsetRange(std::move(ground));
}

}  // namespace subjaccard
