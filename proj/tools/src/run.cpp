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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "spiral/curve.hpp"
#include "spiral/error.hpp"
#include "spiral/estimator.hpp"
#include "spiral/refiner.hpp"
#include "spiral_app/app.hpp"

namespace spiral::app {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void record_failure(BranchResult& row, const Error& e) {
  row.stage_error = e.kind();
  row.stage_message = e.what();
}

// Runs the stages after estimation that the mode asks for.
void advance(BranchResult& row, const InterpolationProblem& problem,
             const RunRequest& request, PhaseTimes& times) {
  if (request.mode == Mode::kEstimate || !row.estimate || row.stage_error) {
    return;
  }
  auto start = Clock::now();
  try {
    Refinement refined =
        refine(*row.estimate, problem, request.quad, request.solver);
    row.refined_energy = elastic_energy(refined.spline);
    row.refined = std::move(refined.spline);
    row.residual = refined.diagnostics.residual;
    row.iterations = refined.diagnostics.iterations;
    row.subintervals = refined.diagnostics.subintervals;
    row.converged = true;
  } catch (const NoConvergenceError& e) {
    row.residual = e.best().diagnostics.residual;
    row.iterations = e.best().diagnostics.iterations;
    row.subintervals = e.best().diagnostics.subintervals;
    record_failure(row, e);
  } catch (const Error& e) {
    record_failure(row, e);
  }
  times.refine += seconds_since(start);
  if (request.mode != Mode::kOptimize || !row.converged) return;

  start = Clock::now();
  try {
    OptimizeResult opt =
        optimize_energy(row, problem, ExtensionFamily::constant(), request.quad,
                        request.solver, request.optimizer);
    row.optimized_energy = opt.energy;
    row.optimized = std::move(opt.spline);
    row.residual = opt.residual;
    row.subintervals = opt.subintervals;
  } catch (const Error& e) {
    record_failure(row, e);
  }
  times.optimize += seconds_since(start);
}

BranchResult estimate_branch(const ChordData& chord,
                             const InterpolationProblem& problem,
                             const SignVector& sigma, PhaseTimes& times) {
  BranchResult row(sigma);
  const auto start = Clock::now();
  try {
    AngleSpline spline = estimate(chord, sigma);
    row.estimate_energy = elastic_energy(spline);
    row.estimate_residual = interpolation_residual(spline, problem);
    row.residual = row.estimate_residual;
    row.estimate = std::move(spline);
  } catch (const Error& e) {
    record_failure(row, e);
  }
  times.estimate += seconds_since(start);
  return row;
}

// Applies `task` to every index in [0, count) on a small thread pool.
template <typename Task>
void parallel_for(std::size_t count, Task&& task) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

void add_times(PhaseTimes& total, const PhaseTimes& part) {
  total.estimate += part.estimate;
  total.refine += part.refine;
  total.optimize += part.optimize;
}

std::vector<SignVector> requested_sigmas(const RunRequest& request,
                                         std::size_t n) {
  std::vector<SignVector> out;
  if (request.selector.kind == BranchSelector::Kind::kExplicit) {
    for (const auto& s : request.selector.sigmas) {
      if (s.size() != n) {
        throw Error(ErrorKind::kInvalidArgument,
                    "sign vector " + s.compact() + " has " +
                        std::to_string(s.size()) + " entries, data has " +
                        std::to_string(n) + " segments");
      }
      out.push_back(s);
    }
    return out;
  }
  for (std::uint64_t index : enumeration_order(n)) {
    out.push_back(SignVector::from_branch_index(index, n));
  }
  return out;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kEstimate:
      return "estimate";
    case Mode::kRefine:
      return "refine";
    case Mode::kOptimize:
      return "optimize";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "estimate") return Mode::kEstimate;
  if (text == "refine") return Mode::kRefine;
  if (text == "optimize") return Mode::kOptimize;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown mode '" + std::string(text) + "'");
}

void RunRequest::check() const {
  validation.check();
  quad.check();
  solver.check();
  if (sample_count < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "sample count must be at least 2 per segment");
  }
  if (selector.kind == BranchSelector::Kind::kExplicit &&
      selector.sigmas.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no sign vectors given");
  }
  if (selector.kind == BranchSelector::Kind::kTopK && selector.top_k == 0) {
    throw Error(ErrorKind::kInvalidArgument, "top-k needs k >= 1");
  }
}

double selected_energy(const BranchResult& row, Mode mode) {
  switch (mode) {
    case Mode::kOptimize:
      return row.optimized_energy.value();
    case Mode::kRefine:
      return row.refined_energy.value();
    case Mode::kEstimate:
      break;
  }
  return row.estimate_energy;
}

const AngleSpline& selected_spline(const BranchResult& row, Mode mode) {
  switch (mode) {
    case Mode::kOptimize:
      return row.optimized.value();
    case Mode::kRefine:
      return row.refined.value();
    case Mode::kEstimate:
      break;
  }
  return row.estimate.value();
}

BranchResult solve_branch(const ChordData& chord,
                          const InterpolationProblem& problem,
                          const SignVector& sigma, const RunRequest& request,
                          PhaseTimes* times) {
  PhaseTimes local;
  BranchResult row = estimate_branch(chord, problem, sigma, local);
  advance(row, problem, request, local);
  if (times != nullptr) add_times(*times, local);
  return row;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("SPIRAL_WORKERS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunReport run(const RunRequest& request) {
  request.check();
  const auto start = Clock::now();
  std::string text;
  if (request.input_text) {
    text = *request.input_text;
  } else {
    std::ifstream in(request.input_path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::kIOError, "cannot read " + request.input_path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const InterpolationProblem problem = parse_problem(text, request.format);
  const double parse_time = seconds_since(start);
  RunReport report = run(request, problem);
  report.times.parse = parse_time;
  return report;
}

RunReport run(const RunRequest& request, const InterpolationProblem& problem) {
  request.check();
  RunReport report;
  report.mode = request.mode;
  report.problem = problem;

  auto start = Clock::now();
  const ChordData chord = validate(problem, request.validation);
  report.times.validate = seconds_since(start);

  const std::vector<SignVector> sigmas =
      requested_sigmas(request, problem.segment_count());
  std::vector<BranchResult> rows(sigmas.size(), BranchResult(sigmas[0]));
  std::vector<PhaseTimes> times(sigmas.size());

  if (request.selector.kind == BranchSelector::Kind::kTopK) {
    parallel_for(sigmas.size(), [&](std::size_t i) {
      rows[i] = estimate_branch(chord, problem, sigmas[i], times[i]);
    });
    // Keep the k best estimates; failed estimates rank last.
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      const bool ok_a = rows[a].estimate.has_value();
      const bool ok_b = rows[b].estimate.has_value();
      if (ok_a != ok_b) return ok_a;
      return rows[a].estimate_energy < rows[b].estimate_energy;
    });
    order.resize(std::min(order.size(), request.selector.top_k));
    std::vector<BranchResult> kept;
    std::vector<PhaseTimes> kept_times;
    for (std::size_t i : order) {
      kept.push_back(std::move(rows[i]));
      kept_times.push_back(times[i]);
    }
    rows = std::move(kept);
    times = std::move(kept_times);
    parallel_for(rows.size(), [&](std::size_t i) {
      advance(rows[i], problem, request, times[i]);
    });
  } else {
    parallel_for(sigmas.size(), [&](std::size_t i) {
      rows[i] = solve_branch(chord, problem, sigmas[i], request, &times[i]);
    });
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    add_times(report.times, times[i]);
    (rows[i].stage_error ? report.failures : report.rows)
        .push_back(std::move(rows[i]));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [&](const BranchResult& a, const BranchResult& b) {
                     const double ea = selected_energy(a, request.mode);
                     const double eb = selected_energy(b, request.mode);
                     if (ea != eb) return ea < eb;
                     return a.sigma.branch_index() < b.sigma.branch_index();
                   });
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const BranchResult& a, const BranchResult& b) {
                     return a.sigma.branch_index() < b.sigma.branch_index();
                   });
  return report;
}

}  // namespace spiral::app
