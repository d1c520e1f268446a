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
#include <string>
#include <string_view>
#include <vector>

#include "spiral/branch.hpp"
#include "spiral/newton.hpp"
#include "spiral/optimizer.hpp"
#include "spiral/problem.hpp"
#include "spiral/quadrature.hpp"
#include "spiral/sign_vector.hpp"

namespace spiral::app {

enum class Mode { kEstimate, kRefine, kOptimize };
enum class InputFormat { kCsv, kJson };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);
InputFormat parse_format(std::string_view text);
// Guesses from the file extension; CSV unless it ends in .json.
InputFormat format_from_path(std::string_view path);

// CSV rows "t,x,y" (optional header line, LF or CRLF) or a JSON object
// {"times": [...], "points": [[x, y], ...]}.
InterpolationProblem parse_problem(std::string_view text, InputFormat format);

struct BranchSelector {
  enum class Kind { kAll, kExplicit, kTopK };
  Kind kind = Kind::kAll;
  std::vector<SignVector> sigmas;  // kExplicit
  std::size_t top_k = 0;           // kTopK: best k by estimate energy
};

struct RunRequest {
  // Either a file to read or the text itself.
  std::string input_path;
  std::optional<std::string> input_text;
  InputFormat format = InputFormat::kCsv;

  Mode mode = Mode::kEstimate;
  BranchSelector selector;
  ValidationConfig validation;
  QuadratureConfig quad;
  SolverConfig solver;
  OptimizerConfig optimizer;

  // Curve samples per segment in the CSV output.
  int sample_count = 50;
  // Output directory; nothing is written when empty.
  std::string out_dir;
  bool write_json = true;
  bool write_csv = true;
  bool write_svg = false;

  void check() const;
};

struct PhaseTimes {
  double parse = 0.0;
  double validate = 0.0;
  double estimate = 0.0;
  double refine = 0.0;
  double optimize = 0.0;
};

struct RunReport {
  Mode mode = Mode::kEstimate;
  InterpolationProblem problem;
  // Ascending by the energy of the mode's spline.
  std::vector<BranchResult> rows;
  // Branches that failed at some stage, by branch index.
  std::vector<BranchResult> failures;
  // Failures before an estimate existed keep only sigma and the error.
  PhaseTimes times;  // summed over branches, seconds

  std::size_t branch_count() const { return rows.size() + failures.size(); }
};

// Energy of the spline the mode produces. Requires that stage to have run.
double selected_energy(const BranchResult& row, Mode mode);
const AngleSpline& selected_spline(const BranchResult& row, Mode mode);

// One branch through the stages the mode asks for. Errors after the
// estimate are recorded in the result rather than thrown.
BranchResult solve_branch(const ChordData& chord,
                          const InterpolationProblem& problem,
                          const SignVector& sigma, const RunRequest& request,
                          PhaseTimes* times = nullptr);

// Worker count from SPIRAL_WORKERS, else the hardware concurrency.
std::size_t worker_count();

RunReport run(const RunRequest& request);
RunReport run(const RunRequest& request, const InterpolationProblem& problem);

// Writes per-branch JSON and CSV, the optional SVG plot and summary.csv.
void emit_outputs(const RunReport& report, const RunRequest& request);

// Plain-text ranking, energies at 4 significant digits.
std::string format_ranking(const RunReport& report);

}  // namespace spiral::app
