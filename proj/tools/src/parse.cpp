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

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "spiral/error.hpp"
#include "spiral_app/app.hpp"

namespace spiral::app {

namespace {

std::string_view trim(std::string_view s) {
  const auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<double> to_number(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

InterpolationProblem parse_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<double> times;
  std::vector<Vec2> points;
  std::size_t line_no = 0;
  bool first_content = true;
  for (std::string_view rest = text; !rest.empty();) {
    const std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(line_no) + ": expected 3 fields, got " +
                      std::to_string(fields.size()),
                  line_no);
    }
    double values[3];
    bool numeric = true;
    for (std::size_t f = 0; f < 3; ++f) {
      const auto v = to_number(fields[f]);
      if (!v) {
        if (first_content) {
          numeric = false;
          break;
        }
        throw Error(ErrorKind::kParseError,
                    "line " + std::to_string(line_no) + ", field " +
                        std::to_string(f + 1) + ": not a number: '" +
                        std::string(trim(fields[f])) + "'",
                    line_no);
      }
      values[f] = *v;
    }
    // A non-numeric first row is a header.
    const bool header = first_content && !numeric;
    first_content = false;
    if (header) continue;
    times.push_back(values[0]);
    points.push_back({values[1], values[2]});
  }
  return make_problem(std::move(times), std::move(points));
}

InterpolationProblem parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("times") || !doc.contains("points")) {
    throw Error(ErrorKind::kParseError,
                "expected an object with \"times\" and \"points\"");
  }
  const auto& jt = doc["times"];
  const auto& jp = doc["points"];
  if (!jt.is_array() || !jp.is_array()) {
    throw Error(ErrorKind::kParseError, "\"times\" and \"points\" must be arrays");
  }
  std::vector<double> times;
  for (std::size_t i = 0; i < jt.size(); ++i) {
    if (!jt[i].is_number()) {
      throw Error(ErrorKind::kParseError,
                  "times[" + std::to_string(i) + "] is not a number", i);
    }
    times.push_back(jt[i].get<double>());
  }
  std::vector<Vec2> points;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const auto& p = jp[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw Error(ErrorKind::kParseError,
                  "points[" + std::to_string(i) + "] must be [x, y]", i);
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return make_problem(std::move(times), std::move(points));
}

}  // namespace

InputFormat parse_format(std::string_view text) {
  if (text == "csv") return InputFormat::kCsv;
  if (text == "json") return InputFormat::kJson;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown format '" + std::string(text) + "'");
}

InputFormat format_from_path(std::string_view path) {
  return path.ends_with(".json") ? InputFormat::kJson : InputFormat::kCsv;
}

InterpolationProblem parse_problem(std::string_view text, InputFormat format) {
  return format == InputFormat::kJson ? parse_json(text) : parse_csv(text);
}

}  // namespace spiral::app
