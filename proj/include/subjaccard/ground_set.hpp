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
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace subjaccard {

class GroundSet;
using GroundSetPtr = std::shared_ptr<const GroundSet>;

// An ordered finite universe of labeled elements. Element i corresponds to
// bit i of a subset mask, so the universe is capped at the mask width (64).
// Labels must be unique, nonempty, free of ',' (the subset-encoding
// separator), and none may be the literal "-" (the empty-set encoding).
class GroundSet {
 public:
  // Throws MalformedSpec on any label-rule violation or size breach.
  static GroundSetPtr create(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int index) const;

  // Index of a label; throws UnknownLabel when absent.
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  // Mask with every element present.
  std::uint64_t full_mask() const {
    return size() == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << size()) - 1;
  }

  // Two ground sets are interchangeable iff their label sequences match.
  bool same_as(const GroundSet& other) const;

 private:
  explicit GroundSet(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace subjaccard
