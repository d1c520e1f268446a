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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spiral {

enum class ErrorKind {
  kInvalidArgument,
  kChordTooLong,
  kCurvatureTooSmall,
  kGapRatio,
  kZeroChord,
  kOutOfDomain,
  kSingularSystem,
  kNegativeDiscriminant,
  kExtensionPresent,
  kContinuityViolated,
  kNoConvergence,
  kSingularJacobian,
  kConstraintViolated,
  kParseError,
  kNonMonotoneTimes,
  kCountMismatch,
  kIOError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. `index()` carries the
// offending segment (0-based) or input line when one is meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace spiral
