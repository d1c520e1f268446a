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

#include "spiral/error.hpp"

namespace spiral {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kChordTooLong: return "ChordTooLong";
    case ErrorKind::kCurvatureTooSmall: return "CurvatureTooSmall";
    case ErrorKind::kGapRatio: return "GapRatio";
    case ErrorKind::kZeroChord: return "ZeroChord";
    case ErrorKind::kOutOfDomain: return "OutOfDomain";
    case ErrorKind::kSingularSystem: return "SingularSystem";
    case ErrorKind::kNegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::kExtensionPresent: return "ExtensionPresent";
    case ErrorKind::kContinuityViolated: return "ContinuityViolated";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kSingularJacobian: return "SingularJacobian";
    case ErrorKind::kConstraintViolated: return "ConstraintViolated";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kNonMonotoneTimes: return "NonMonotoneTimes";
    case ErrorKind::kCountMismatch: return "CountMismatch";
    case ErrorKind::kIOError: return "IOError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> index) {
  std::string out(to_string(kind));
  if (index) out += " [" + std::to_string(*index) + "]";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(decorate(kind, message, index)),
      kind_(kind),
      index_(index) {}

}  // namespace spiral
