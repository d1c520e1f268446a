// Copyright 2026 The Spiral Spline Authors
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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spiral {

// One concavity branch: sigma_j = +1 or -1 for every segment.
//
// Branch indices are n-bit patterns read most-significant first: bit p_j of
// the index gives sigma_j = (-1)^{p_j}. Index 0 is all +1 and equals the
// enumeration position 2^n (the n low bits of 2^n are zero).
class SignVector {
 public:
  explicit SignVector(std::vector<int> entries);

  static SignVector all_positive(std::size_t n);
  static SignVector from_branch_index(std::uint64_t index, std::size_t n);
  // Parses "1,-1,1" or "+-+".
  static SignVector parse(const std::string& text);

  std::uint64_t branch_index() const;
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  // "+-+" form, used in file names.
  std::string compact() const;
  // "(1,-1,1)" form.
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> entries_;
};

// Branch indices in enumeration order p = 1, 2, ..., 2^n (the last one wraps
// to index 0).
std::vector<std::uint64_t> enumeration_order(std::size_t n);

}  // namespace spiral
