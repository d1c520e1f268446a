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

// Acceptance report: one PASS/FAIL line per criterion, with the measured
// values underneath. Exits nonzero only if the harness itself breaks, so a
// FAIL line is a finding, not a crash.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "datasets.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "spiral/spiral.hpp"
#include "spiral_app/app.hpp"

namespace {

using namespace spiral;
using Clock = std::chrono::steady_clock;

struct Check {
  std::string what;
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void check(std::string what, bool pass, std::string detail) {
    checks.push_back({std::move(what), pass, std::move(detail)});
  }
  bool pass() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

app::RunRequest request_for(const InterpolationProblem& p, app::Mode mode) {
  std::ostringstream csv;
  csv.precision(17);
  for (std::size_t j = 0; j < p.times.size(); ++j) {
    csv << p.times[j] << ',' << p.waypoints[j].x << ',' << p.waypoints[j].y << '\n';
  }
  app::RunRequest r;
  r.input_text = csv.str();
  r.mode = mode;
  return r;
}

const BranchResult* find_row(const app::RunReport& report, const SignVector& s) {
  for (const auto* group : {&report.rows, &report.failures}) {
    for (const auto& row : *group) {
      if (row.sigma == s) return &row;
    }
  }
  return nullptr;
}

// Splines collected from every pipeline run, for the invariant criterion.
std::vector<AngleSpline> emitted;

void collect(const app::RunReport& report) {
  for (const auto* group : {&report.rows, &report.failures}) {
    for (const auto& row : *group) {
      if (row.estimate) emitted.push_back(*row.estimate);
      if (row.refined) emitted.push_back(*row.refined);
      if (row.optimized) emitted.push_back(*row.optimized);
    }
  }
}

Criterion three_point_estimates() {
  Criterion c{1, "three-point estimate energies", {}, {}};
  const std::vector<std::pair<SignVector, double>> expected{
      {SignVector({1, 1}), 17.60},
      {SignVector({-1, 1}), 10.59},
      {SignVector({1, -1}), 4.12},
      {SignVector({-1, -1}), 5.39}};
  const auto start = Clock::now();
  try {
    const auto report = app::run(request_for(testing::three_point(), app::Mode::kEstimate));
    const double elapsed = seconds_since(start);
    collect(report);
    for (const auto& [sigma, want] : expected) {
      const BranchResult* row = find_row(report, sigma);
      const bool ok = row && row->estimate &&
                      std::abs(row->estimate_energy - want) <= 0.05;
      c.check("J" + sigma.to_string(), ok,
              row && row->estimate ? fmt("%.4f vs %.2f +- 0.05", row->estimate_energy, want)
                                   : std::string("no estimate"));
    }
    c.check("runtime", elapsed < 0.1, fmt("%.4fs < 0.1s", elapsed));
  } catch (const Error& e) {
    c.check("validate + estimate", false,
            fmt("%s: %s", std::string(to_string(e.kind())).c_str(), e.what()));
  }
  // Same waypoints with T_2 = 1.1, reported for comparison only.
  const auto report =
      app::run(request_for(testing::three_point(1.1), app::Mode::kEstimate));
  collect(report);
  std::string line = "with T_2 = 1.1 (informational):";
  for (const auto& [sigma, want] : expected) {
    const BranchResult* row = find_row(report, sigma);
    line += fmt(" %s %.4f (%s)", sigma.compact().c_str(), row->estimate_energy,
                std::abs(row->estimate_energy - want) <= 0.05 ? "ok" : "off");
  }
  c.notes.push_back(line);
  return c;
}

Criterion five_segment_refinement() {
  Criterion c{2, "five-segment estimates and refinement", {}, {}};
  const auto problem = testing::five_segment();
  const auto start = Clock::now();
  const auto report = app::run(request_for(problem, app::Mode::kRefine));
  const double elapsed = seconds_since(start);
  collect(report);

  int estimated = 0;
  int converged = 0;
  double lo = INFINITY;
  double hi = -INFINITY;
  std::string stalled;
  for (const auto* group : {&report.rows, &report.failures}) {
    for (const auto& row : *group) {
      if (row.estimate) {
        ++estimated;
        lo = std::min(lo, row.estimate_energy);
        hi = std::max(hi, row.estimate_energy);
      }
      if (row.converged && row.residual <= 1e-8) {
        ++converged;
      } else {
        stalled += fmt(" %s(%.1e)", row.sigma.compact().c_str(), row.residual);
      }
    }
  }
  c.check("all 32 estimate", estimated == 32, fmt("%d/32", estimated));
  c.check("estimate minimum", std::abs(lo - 20.71) <= 0.5, fmt("%.4f vs 20.71 +- 0.5", lo));
  c.check("estimate maximum", std::abs(hi - 100.60) <= 0.5, fmt("%.4f vs 100.60 +- 0.5", hi));
  c.check("all 32 refine to 1e-8", converged == 32,
          fmt("%d/32; not converged:%s", converged, stalled.c_str()));

  struct Row {
    const char* sigma;
    double estimate;
    double refined;
    double tol;
  };
  const Row table[] = {{"--+-+", 20.71, 20.98, 0.05}, {"-+-+-", 21.51, 21.8, 0.05},
                       {"+-+-+", 23.31, 22.82, 0.05}, {"+++++", 100.60, 61.69, 0.5},
                       {"-++++", 83.2, 54.59, 0.5},   {"--+++", 66.56, 45.82, 0.5}};
  for (const auto& t : table) {
    const BranchResult* row = find_row(report, SignVector::parse(t.sigma));
    const bool est_ok = row->estimate && std::abs(row->estimate_energy - t.estimate) <= t.tol;
    const bool ref_ok =
        row->refined_energy && std::abs(*row->refined_energy - t.refined) <= t.tol;
    c.check(std::string("row ") + t.sigma, est_ok && ref_ok,
            fmt("estimate %.4f vs %.2f, refined %s vs %.2f, +- %.2f", row->estimate_energy,
                t.estimate,
                row->refined_energy ? fmt("%.4f", *row->refined_energy).c_str() : "none",
                t.refined, t.tol));
  }
  c.check("runtime", elapsed < 10.0, fmt("%.2fs < 10s", elapsed));
  return c;
}

Criterion circle_branches() {
  Criterion c{3, "circle branches", {}, {}};
  const auto problem = testing::circle(7);
  const auto report = app::run(request_for(problem, app::Mode::kEstimate));
  collect(report);
  c.check("all 128 estimate", report.rows.size() == 128,
          fmt("%zu/128", report.rows.size()));
  const BranchResult& top = report.rows.back();
  const SignVector negative = SignVector::from_branch_index(127, 7);
  c.check("max estimate energy at all -1",
          top.sigma == negative && std::abs(top.estimate_energy - 37.21) <= 0.5,
          fmt("%.4f at %s vs 37.21 +- 0.5", top.estimate_energy, top.sigma.compact().c_str()));

  const Refinement r = refine(estimate(validate(problem), SignVector::all_positive(7)), problem);
  emitted.push_back(r.spline);
  const QuadratureConfig fine{512, 512};
  double worst = 0.0;
  for (int i = 0; i <= 1400; ++i) {
    const double t = problem.times.back() * i / 1400;
    const Vec2 p = eval_curve(r.spline, problem.waypoints[0], t, fine);
    worst = std::max(worst, (p - Vec2{std::cos(t), std::sin(t)}).norm());
  }
  c.check("all +1 refined matches arc", worst <= 1e-3, fmt("max distance %.3e <= 1e-3", worst));
  const double energy = elastic_energy(r.spline);
  c.check("all +1 refined energy", energy >= 2.10 && energy <= 2.25,
          fmt("%.4f in [2.10, 2.25]", energy));
  return c;
}

Criterion order_of_accuracy() {
  Criterion c{4, "order of accuracy on the circle", {}, {}};
  const std::size_t n = 7;
  auto measure = [&](double spacing) {
    const auto problem = testing::circle(n, spacing);
    const AngleSpline est = estimate(validate(problem), SignVector::all_positive(n));
    const AngleSpline ref = refine(est, problem).spline;
    const double residual = interpolation_residual(est, problem, {256, 1024});
    double gap = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      const double t = problem.times.back() * i / 4000;
      gap = std::max(gap, std::abs(eval_theta(est, t) - eval_theta(ref, t)));
    }
    return std::pair{residual, gap};
  };
  double residual_ratio = 0.0;
  double theta_ratio = 0.0;
  double spacing = std::numbers::pi / 10;
  for (int k = 0; k < 3; ++k, spacing /= 2) {
    const auto [r1, g1] = measure(spacing);
    const auto [r2, g2] = measure(spacing / 2);
    residual_ratio += r1 / r2 / 3;
    theta_ratio += g1 / g2 / 3;
    c.notes.push_back(fmt("spacing %.5f: residual %.3e -> %.3e, theta gap %.3e -> %.3e",
                          spacing, r1, r2, g1, g2));
  }
  c.check("knot residual contraction", residual_ratio >= 20 && residual_ratio <= 45,
          fmt("%.2f in [20, 45]", residual_ratio));
  c.check("theta contraction", theta_ratio >= 10 && theta_ratio <= 22,
          fmt("%.2f in [10, 22]", theta_ratio));
  return c;
}

Criterion reduced_coordinates() {
  Criterion c{5, "reduced-coordinate identities", {}, {}};
  auto rng = testing::make_rng(500);
  double identity = 0.0;
  double round_trip = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const auto knots = testing::random_knots(rng, n);
    const UVParams uv = testing::random_uv(rng, n);
    const AngleSpline s = coeffs_from_uv(uv, knots);
    identity = std::max(identity, testing::natural_identity_defect(s));
    const UVParams back = uv_from_coeffs(s);
    for (std::size_t j = 0; j < n; ++j) {
      round_trip = std::max({round_trip, std::abs(back.u[j] - uv.u[j]),
                             std::abs(back.v[j] - uv.v[j])});
    }
  }
  c.check("continuity and end identities", identity <= 1e-12,
          fmt("worst %.2e <= 1e-12", identity));
  c.check("uv round trip", round_trip <= 1e-12, fmt("worst %.2e <= 1e-12", round_trip));
  return c;
}

Criterion oracles() {
  Criterion c{6, "oracle equivalence", {}, {}};
  auto rng = testing::make_rng(600);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = testing::random_dominant_system(rng, testing::uniform_size(rng, 1, 12));
    const auto x = solve_tridiagonal(s);
    const auto y = testing::dense_solve(s);
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  c.check("tridiagonal vs dense LU", worst <= 1e-12, fmt("worst %.2e <= 1e-12", worst));

  double ratio = 0.0;
  int count = 0;
  double finest = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::random_cubic_spline(rng, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec2 ref = testing::reference_displacement(s, j);
      const double e1 = (segment_displacement(s, j, {16, 16}) - ref).norm();
      const double e2 = (segment_displacement(s, j, {32, 32}) - ref).norm();
      finest = std::max(finest, e2);
      ratio += e1 / e2;
      ++count;
    }
  }
  ratio /= count;
  // Order 4 within a quarter: ratio 2^3.75 .. 2^4.25.
  c.check("Simpson fourth-order contraction",
          ratio >= std::pow(2.0, 3.75) && ratio <= std::pow(2.0, 4.25),
          fmt("mean ratio %.2f in [13.45, 19.03], worst error at 32: %.1e", ratio, finest));
  return c;
}

Criterion optimisation() {
  Criterion c{7, "energy optimisation from refined seeds", {}, {}};
  const auto start = Clock::now();
  const auto report = app::run(request_for(testing::five_segment(), app::Mode::kOptimize));
  const double elapsed = seconds_since(start);
  collect(report);
  int seeds = 0;
  int optimised = 0;
  double lo = INFINITY;
  double hi = -INFINITY;
  double dmin = INFINITY;
  double dmax = -INFINITY;
  double dsum = 0.0;
  for (const auto* group : {&report.rows, &report.failures}) {
    for (const auto& row : *group) {
      if (!row.converged) continue;
      ++seeds;
      if (!row.optimized_energy) continue;
      ++optimised;
      const double drop = *row.refined_energy - *row.optimized_energy;
      dmin = std::min(dmin, drop);
      dmax = std::max(dmax, drop);
      dsum += drop;
      lo = std::min(lo, *row.optimized_energy);
      hi = std::max(hi, *row.optimized_energy);
    }
  }
  const double mean = optimised ? dsum / optimised : NAN;
  c.check("32 refined seeds", seeds == 32, fmt("%d/32 seeds available", seeds));
  c.check("every seed optimised", optimised == seeds, fmt("%d/%d", optimised, seeds));
  c.check("no increase", dmin >= -1e-8, fmt("smallest change %.4g >= -1e-8", dmin));
  c.check("decreases in [0, 0.35]", dmin >= 0 && dmax <= 0.35,
          fmt("[%.4f, %.4f]", dmin, dmax));
  c.check("mean decrease in [0.05, 0.15]", mean >= 0.05 && mean <= 0.15, fmt("%.4f", mean));
  c.check("optimised minimum", std::abs(lo - 20.97) <= 0.5, fmt("%.4f vs 20.97 +- 0.5", lo));
  c.check("optimised maximum", std::abs(hi - 61.58) <= 0.5, fmt("%.4f vs 61.58 +- 0.5", hi));
  c.check("runtime", elapsed < 60.0, fmt("%.1fs < 60s", elapsed));
  return c;
}

Criterion invariants() {
  Criterion c{8, "unit speed and natural ends", {}, {}};
  auto rng = testing::make_rng(800);
  const double h = 1e-5;
  double speed = 0.0;
  double start_slope = 0.0;
  double end_slope = 0.0;
  for (const auto& s : emitted) {
    const QuadratureConfig quad{256, 256};
    for (int k = 0; k < 100; ++k) {
      const double t = testing::uniform(rng, s.start_time() + h, s.end_time() - h);
      const Vec2 d = eval_curve(s, {}, t + h, quad) - eval_curve(s, {}, t - h, quad);
      speed = std::max(speed, std::abs(d.norm() / (2 * h) - 1));
    }
    // Coefficient identities: b_0 and theta'(L) of the last segment.
    start_slope = std::max(start_slope, std::abs(s.segment(0).b));
    const std::size_t n = s.segment_count();
    end_slope = std::max(end_slope, std::abs(s.local_derivative(n - 1, s.length(n - 1))));
  }
  c.check("finite-difference speed", speed <= 1e-6,
          fmt("%zu splines, worst |speed - 1| %.2e <= 1e-6", emitted.size(), speed));
  c.check("theta'(T_0) = 0", start_slope == 0.0, fmt("worst %.2e", start_slope));
  c.check("theta'(T_n) = 0", end_slope <= 1e-10, fmt("worst %.2e <= 1e-10", end_slope));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Criterion()>> criteria{
      three_point_estimates, five_segment_refinement, circle_branches, order_of_accuracy,
      reduced_coordinates,   oracles,                 optimisation,    invariants};
  std::ostringstream out;
  std::string full;
  int passed = 0;
  try {
    for (const auto& run : criteria) {
      const Criterion c = run();
      passed += c.pass();
      out << (c.pass() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << '\n';
      for (const auto& check : c.checks) {
        out << "        " << (check.pass ? "ok  " : "miss") << "  " << check.what << ": "
            << check.detail << '\n';
      }
      for (const auto& note : c.notes) out << "        note  " << note << '\n';
      std::fputs(out.str().c_str(), stdout);
      std::fflush(stdout);
      full += out.str();
      out.str({});
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance harness error: %s\n", e.what());
    return 2;
  }
  const std::string tally = fmt("%d of %zu criteria pass\n", passed, criteria.size());
  std::fputs(tally.c_str(), stdout);
  if (argc > 1) std::ofstream(argv[1]) << full << tally;
  return 0;
}
