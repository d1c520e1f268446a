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

#include "spiral/sign_vector.hpp"

#include <sstream>

#include "spiral/error.hpp"

namespace spiral {

namespace {
constexpr std::size_t kMaxSegments = 62;
}

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() > kMaxSegments) {
    throw Error(ErrorKind::kInvalidArgument, "sign vector length out of range");
  }
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] != 1 && entries_[j] != -1) {
      throw Error(ErrorKind::kInvalidArgument, "sign entries must be +1 or -1",
                  j);
    }
  }
}

SignVector SignVector::all_positive(std::size_t n) {
  return SignVector(std::vector<int>(n, 1));
}

SignVector SignVector::from_branch_index(std::uint64_t index, std::size_t n) {
  if (n == 0 || n > kMaxSegments || index >= (std::uint64_t{1} << n)) {
    throw Error(ErrorKind::kInvalidArgument, "branch index out of range");
  }
  std::vector<int> entries(n);
  for (std::size_t j = 0; j < n; ++j) {
    const bool bit = (index >> (n - 1 - j)) & 1U;
    entries[j] = bit ? -1 : 1;
  }
  return SignVector(std::move(entries));
}

SignVector SignVector::parse(const std::string& text) {
  std::vector<int> entries;
  if (text.find_first_not_of("+-") == std::string::npos) {
    for (char ch : text) entries.push_back(ch == '+' ? 1 : -1);
    return SignVector(std::move(entries));
  }
  std::string cleaned;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ' && ch != '[' && ch != ']') {
      cleaned += ch;
    }
  }
  std::stringstream in(cleaned);
  std::string field;
  while (std::getline(in, field, ',')) {
    if (field == "1" || field == "+1" || field == "+") {
      entries.push_back(1);
    } else if (field == "-1" || field == "-") {
      entries.push_back(-1);
    } else {
      throw Error(ErrorKind::kParseError, "bad sign entry '" + field + "'",
                  entries.size());
    }
  }
  return SignVector(std::move(entries));
}

std::uint64_t SignVector::branch_index() const {
  std::uint64_t index = 0;
  for (int s : entries_) index = (index << 1) | (s < 0 ? 1U : 0U);
  return index;
}

std::string SignVector::compact() const {
  std::string out;
  for (int s : entries_) out += s > 0 ? '+' : '-';
  return out;
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out += ',';
    out += entries_[j] > 0 ? "1" : "-1";
  }
  return out + ")";
}

std::vector<std::uint64_t> enumeration_order(std::size_t n) {
  if (n == 0 || n > kMaxSegments) {
    throw Error(ErrorKind::kInvalidArgument, "segment count out of range");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> order;
  order.reserve(count);
  for (std::uint64_t p = 1; p <= count; ++p) order.push_back(p % count);
  return order;
}

}  // namespace spiral
