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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spiral/error.hpp"
#include "spiral_app/app.hpp"

namespace {

using spiral::ErrorKind;
using namespace spiral::app;

struct Options {
  std::string input;
  std::string format;
  std::string mode = "estimate";
  std::vector<std::string> sigmas;
  bool all = false;
  std::size_t top_k = 0;
  int simpson = 4;
  int simpson_cap = 1024;
  double tol = 1e-10;
  int samples = 50;
  std::string out;
  bool svg = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Options& o, bool with_mode) {
  cmd->add_option("-i,--input", o.input, "CSV (t,x,y) or JSON input file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "csv or json (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_mode) {
    cmd->add_option("--mode", o.mode, "estimate, refine or optimize")
        ->check(CLI::IsMember({"estimate", "refine", "optimize"}))
        ->capture_default_str();
  }
  auto* sigma = cmd->add_option("--sigma", o.sigmas,
                                "sign vector, e.g. +-+ or 1,-1,1 (repeatable)");
  auto* all = cmd->add_flag("--all", o.all, "every branch (default)");
  auto* top = cmd->add_option("--top-k", o.top_k,
                              "the k branches with lowest estimate energy");
  sigma->excludes(all)->excludes(top);
  all->excludes(top);
  cmd->add_option("--simpson", o.simpson, "initial Simpson subintervals per segment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--simpson-cap", o.simpson_cap, "largest Simpson subinterval count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol", o.tol, "interpolation residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--samples", o.samples, "curve samples per segment")
      ->capture_default_str();
  cmd->add_option("-o,--out", o.out, "output directory");
  cmd->add_flag("--svg", o.svg, "also write SVG plots");
  cmd->add_flag("-q,--quiet", o.quiet, "no ranking table or timings");
}

RunRequest make_request(const Options& o) {
  RunRequest r;
  r.input_path = o.input;
  r.format = o.format.empty() ? format_from_path(o.input) : parse_format(o.format);
  r.mode = parse_mode(o.mode);
  if (!o.sigmas.empty()) {
    r.selector.kind = BranchSelector::Kind::kExplicit;
    for (const auto& s : o.sigmas) {
      r.selector.sigmas.push_back(spiral::SignVector::parse(s));
    }
  } else if (o.top_k > 0) {
    r.selector.kind = BranchSelector::Kind::kTopK;
    r.selector.top_k = o.top_k;
  }
  r.quad.simpson_subintervals = o.simpson;
  r.quad.max_subintervals = o.simpson_cap;
  r.solver.residual_tol = o.tol;
  r.sample_count = o.samples;
  r.out_dir = o.out;
  r.write_svg = o.svg;
  return r;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kNonMonotoneTimes:
    case ErrorKind::kCountMismatch:
      return 3;
    case ErrorKind::kIOError:
      return 1;
    default:
      return 2;
  }
}

void print_times(const RunReport& report) {
  const auto& t = report.times;
  std::printf(
      "time: parse %.4fs  validate %.4fs  estimate %.4fs  refine %.4fs  "
      "optimize %.4fs\n",
      t.parse, t.validate, t.estimate, t.refine, t.optimize);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-speed spiral spline interpolation"};
  app.require_subcommand(1);
  Options opts;
  auto* fit = app.add_subcommand("fit", "estimate or refine branches");
  add_common(fit, opts, true);
  auto* optimize = app.add_subcommand("optimize", "refine, then lower the energy");
  add_common(optimize, opts, false);
  add_common(app.add_subcommand("rank", "print branches ordered by energy"),
             opts, true);
  CLI11_PARSE(app, argc, argv);

  if (optimize->parsed()) opts.mode = "optimize";
  try {
    const RunRequest request = make_request(opts);
    const RunReport report = run(request);
    emit_outputs(report, request);
    if (!opts.quiet) {
      std::cout << format_ranking(report);
      print_times(report);
    }
    if (report.rows.empty()) {
      std::cerr << "no branch succeeded\n";
      return 1;
    }
    return 0;
  } catch (const spiral::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}
