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
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spiral/curve.hpp"
#include "spiral/error.hpp"
#include "spiral_app/app.hpp"

namespace spiral::app {

namespace fs = std::filesystem;

namespace {

std::string fixed17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sig4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// File stem for a branch, e.g. "branch_05_pmp" for (1,-1,1).
std::string stem(const SignVector& sigma) {
  std::string tag;
  for (int s : sigma.entries()) tag += s > 0 ? 'p' : 'm';
  // Wide enough for the largest index, 2^n - 1.
  const int width = static_cast<int>(
      std::to_string((std::uint64_t{1} << sigma.size()) - 1).size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*llu", width,
                static_cast<unsigned long long>(sigma.branch_index()));
  return "branch_" + std::string(buf) + "_" + tag;
}

nlohmann::json spline_json(const AngleSpline& spline) {
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& g : spline.segments()) segs.push_back({g.a, g.b, g.c, g.d});
  nlohmann::json out{{"coefficients", segs}};
  if (spline.has_extension()) {
    out["extension"] = {
        {"family", spline.family()->name()},
        {"params", std::vector<double>(spline.params().begin(),
                                       spline.params().end())}};
  }
  return out;
}

nlohmann::json branch_json(const BranchResult& row, const RunReport& report) {
  const auto knots = row.estimate ? row.estimate->knots()
                                  : std::span<const double>(report.problem.times);
  nlohmann::json out{
      {"sigma", row.sigma.entries()},
      {"branch_index", row.sigma.branch_index()},
      {"mode", std::string(to_string(report.mode))},
      {"knots", std::vector<double>(knots.begin(), knots.end())},
      {"converged", row.converged},
      {"residual", row.residual},
      {"iterations", row.iterations},
      {"subintervals", row.subintervals},
  };
  if (row.estimate) {
    out["estimate"] = spline_json(*row.estimate);
    out["estimate"]["energy"] = row.estimate_energy;
    out["estimate"]["residual"] = row.estimate_residual;
  }
  if (row.refined) {
    out["refined"] = spline_json(*row.refined);
    out["refined"]["energy"] = *row.refined_energy;
  }
  if (row.optimized) {
    out["optimized"] = spline_json(*row.optimized);
    out["optimized"]["energy"] = *row.optimized_energy;
  }
  if (row.stage_error) {
    out["error"] = {{"kind", std::string(to_string(*row.stage_error))},
                    {"message", row.stage_message}};
  } else {
    out["energy"] = selected_energy(row, report.mode);
  }
  return out;
}

struct Sample {
  double t;
  Vec2 y;
  Vec2 tilde;
};

// Samples per segment, both ends included, so the re-anchored curve shows
// its jumps at interior knots.
std::vector<Sample> sample_curve(const AngleSpline& spline,
                                 const InterpolationProblem& problem,
                                 int per_segment, int subintervals) {
  std::vector<Sample> out;
  Vec2 start = problem.waypoints.front();
  for (std::size_t j = 0; j < spline.segment_count(); ++j) {
    const double len = spline.length(j);
    for (int i = 0; i < per_segment; ++i) {
      const double s = len * i / (per_segment - 1);
      const Vec2 z = partial_displacement(spline, j, s, subintervals);
      out.push_back({spline.knots()[j] + s, start + z, problem.waypoints[j] + z});
    }
    start += partial_displacement(spline, j, len, subintervals);
  }
  return out;
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  out.close();
  if (!out) throw Error(ErrorKind::kIOError, "cannot write " + path.string());
}

std::string curve_csv(const std::vector<Sample>& samples) {
  std::ostringstream os;
  os << "t,x,y,x_tilde,y_tilde\n";
  for (const auto& s : samples) {
    os << fixed17(s.t) << ',' << fixed17(s.y.x) << ',' << fixed17(s.y.y) << ','
       << fixed17(s.tilde.x) << ',' << fixed17(s.tilde.y) << '\n';
  }
  return os.str();
}

std::string curve_svg(const std::vector<Sample>& samples,
                      const InterpolationProblem& problem,
                      const std::string& title) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto grow = [&](Vec2 p) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };
  for (const auto& s : samples) {
    grow(s.y);
    grow(s.tilde);
  }
  for (const auto& p : problem.waypoints) grow(p);
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double size = 600.0;
  const double margin = 20.0;
  const double k = (size - 2 * margin) / span;
  const double height = (hi_y - lo_y) * k + 2 * margin;
  const double width = (hi_x - lo_x) * k + 2 * margin;
  auto px = [&](Vec2 p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", margin + (p.x - lo_x) * k,
                  height - margin - (p.y - lo_y) * k);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << sig4(width)
     << "\" height=\"" << sig4(height) << "\" viewBox=\"0 0 " << sig4(width)
     << ' ' << sig4(height) << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << (i ? " " : "") << px(samples[i].y);
  }
  os << "\"/>\n";
  // The re-anchored curve, one piece per segment.
  const std::size_t per = samples.size() / problem.segment_count();
  for (std::size_t j = 0; j < problem.segment_count(); ++j) {
    os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" "
          "stroke-dasharray=\"4 3\" points=\"";
    for (std::size_t i = 0; i < per; ++i) {
      os << (i ? " " : "") << px(samples[j * per + i].tilde);
    }
    os << "\"/>\n";
  }
  for (const auto& p : problem.waypoints) {
    const std::string c = px(p);
    const auto comma = c.find(',');
    os << "<circle cx=\"" << c.substr(0, comma) << "\" cy=\""
       << c.substr(comma + 1) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? fixed17(*v) : std::string();
}

}  // namespace

void emit_outputs(const RunReport& report, const RunRequest& request) {
  if (request.out_dir.empty()) return;
  const fs::path dir(request.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::kIOError,
                "cannot create " + dir.string() + ": " + ec.message());
  }

  for (const auto* group : {&report.rows, &report.failures}) {
    for (const auto& row : *group) {
      const std::string name = stem(row.sigma);
      if (request.write_json) {
        write_file(dir / (name + ".json"), branch_json(row, report).dump(2) + "\n");
      }
      if (row.stage_error) continue;
      const AngleSpline& spline = selected_spline(row, report.mode);
      const int subintervals =
          4 * std::max(row.subintervals, request.quad.simpson_subintervals);
      const auto samples = sample_curve(spline, report.problem,
                                        request.sample_count, subintervals);
      if (request.write_csv) write_file(dir / (name + ".csv"), curve_csv(samples));
      if (request.write_svg) {
        write_file(dir / (name + ".svg"),
                   curve_svg(samples, report.problem,
                             row.sigma.to_string() + " J=" +
                                 sig4(selected_energy(row, report.mode))));
      }
    }
  }

  std::ostringstream os;
  os << "rank,sigma,branch_index,status,estimate_energy,refined_energy,"
        "optimized_energy,residual,iterations,subintervals,error\n";
  std::size_t rank = 0;
  for (const auto& row : report.rows) {
    os << ++rank << ',' << row.sigma.compact() << ',' << row.sigma.branch_index()
       << ",ok," << fixed17(row.estimate_energy) << ','
       << optional_cell(row.refined_energy) << ','
       << optional_cell(row.optimized_energy) << ',' << fixed17(row.residual)
       << ',' << row.iterations << ',' << row.subintervals << ",\n";
  }
  for (const auto& row : report.failures) {
    os << ',' << row.sigma.compact() << ',' << row.sigma.branch_index()
       << ",failed,"
       << (row.estimate ? fixed17(row.estimate_energy) : std::string()) << ','
       << optional_cell(row.refined_energy) << ','
       << optional_cell(row.optimized_energy) << ',' << fixed17(row.residual)
       << ',' << row.iterations << ',' << row.subintervals << ','
       << to_string(*row.stage_error) << '\n';
  }
  write_file(dir / "summary.csv", os.str());
}

std::string format_ranking(const RunReport& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s  %-*s  %10s  %10s  %10s  %9s\n", "rank",
                static_cast<int>(std::max<std::size_t>(
                    5, report.problem.segment_count())),
                "sigma", "estimate", "refined", "optimized", "residual");
  os << line;
  const int width =
      static_cast<int>(std::max<std::size_t>(5, report.problem.segment_count()));
  auto cell = [](const std::optional<double>& v) {
    return v ? sig4(*v) : std::string("-");
  };
  std::size_t rank = 0;
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%-4zu  %-*s  %10s  %10s  %10s  %9.2e\n",
                  ++rank, width, row.sigma.compact().c_str(),
                  sig4(row.estimate_energy).c_str(),
                  cell(row.refined_energy).c_str(),
                  cell(row.optimized_energy).c_str(), row.residual);
    os << line;
  }
  for (const auto& row : report.failures) {
    std::snprintf(line, sizeof line, "%-4s  %-*s  %10s  failed: %s\n", "-", width,
                  row.sigma.compact().c_str(),
                  row.estimate ? sig4(row.estimate_energy).c_str() : "-",
                  row.stage_message.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace spiral::app
