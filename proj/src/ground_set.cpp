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

#include "subjaccard/ground_set.hpp"

#include "subjaccard/errors.hpp"
#include "subjaccard/limits.hpp"

namespace subjaccard {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    index_.emplace(labels_[i], i);
  }
}

GroundSetPtr GroundSet::create(std::vector<std::string> labels) {
  if (labels.empty()) throw MalformedSpec("ground set must be nonempty");
  if (labels.size() > caps::kMaskWidth) {
    throw MalformedSpec("ground set exceeds " +
                        std::to_string(caps::kMaskWidth) + " elements");
  }
  for (const std::string& label : labels) {
    if (label.empty()) throw MalformedSpec("empty element label");
    if (label == "-") {
      throw MalformedSpec("label '-' is reserved for the empty set");
    }
    if (label.find(',') != std::string::npos) {
      throw MalformedSpec("label contains ',': '" + label + "'");
    }
  }
  GroundSet gs(std::move(labels));
  if (gs.index_.size() != gs.labels_.size()) {
    throw MalformedSpec("duplicate element label in ground set");
  }
  return GroundSetPtr(new GroundSet(std::move(gs)));
}

const std::string& GroundSet::label(int index) const {
  if (index < 0 || index >= size()) {
    throw Error("element index out of range: " + std::to_string(index));
  }
  return labels_[static_cast<std::size_t>(index)];
}

int GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel(label);
  return it->second;
}

bool GroundSet::contains(const std::string& label) const {
  return index_.count(label) != 0;
}

bool GroundSet::same_as(const GroundSet& other) const {
  return this == &other || labels_ == other.labels_;
}

}  // namespace subjaccard
