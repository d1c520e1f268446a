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

#include "spiral/newton.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "spiral/error.hpp"

namespace spiral {

void SolverConfig::check() const {
  if (!(residual_tol > 0.0) || max_iterations <= 0 || !(fd_step > 0.0) ||
      !(damping > 0.0 && damping < 1.0) || max_halvings <= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "solver settings must be positive with damping in (0, 1)");
  }
}

double max_norm(std::span<const double> values) {
  double out = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
    out = std::max(out, std::abs(v));
  }
  return out;
}

std::vector<std::vector<double>> fd_jacobian(const ResidualFn& f,
                                             std::span<const double> x,
                                             double step) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<std::vector<double>> columns(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    probe[k] = x[k] + step;
    const std::vector<double> plus = f(probe);
    probe[k] = x[k] - step;
    const std::vector<double> minus = f(probe);
    probe[k] = x[k];
    columns[k].resize(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i) {
      columns[k][i] = (plus[i] - minus[i]) / (2.0 * step);
    }
  }
  return columns;
}

NewtonResult damped_newton(const ResidualFn& f, std::vector<double> x0,
                           const SolverConfig& config) {
  config.check();
  NewtonResult out;
  out.x = std::move(x0);
  std::vector<double> r = f(out.x);
  if (r.size() != out.x.size()) {
    throw Error(ErrorKind::kInvalidArgument, "Newton system must be square");
  }
  out.residual = max_norm(r);
  out.history.push_back(out.residual);
  const auto m = static_cast<Eigen::Index>(out.x.size());

  while (out.residual > config.residual_tol &&
         out.iterations < config.max_iterations) {
    const auto columns = fd_jacobian(f, out.x, config.fd_step);
    Eigen::MatrixXd jac(m, m);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (Eigen::Index i = 0; i < m; ++i) jac(i, k) = columns[k][i];
      rhs(k) = -r[k];
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    if (!(lu.rcond() > 1e-14)) {
      throw Error(ErrorKind::kSingularJacobian,
                  "finite-difference Jacobian is numerically singular");
    }
    const Eigen::VectorXd step = lu.solve(rhs);

    double scale = 1.0;
    bool accepted = false;
    std::vector<double> trial(out.x.size());
    for (int h = 0; h <= config.max_halvings; ++h) {
      for (std::size_t k = 0; k < trial.size(); ++k) {
        trial[k] = out.x[k] + scale * step(static_cast<Eigen::Index>(k));
      }
      std::vector<double> rt = f(trial);
      const double res = max_norm(rt);
      if (res < out.residual) {
        out.x = trial;
        r = std::move(rt);
        out.residual = res;
        accepted = true;
        break;
      }
      scale *= config.damping;
    }
    if (!accepted) break;
    ++out.iterations;
    out.history.push_back(out.residual);
  }
  out.converged = out.residual <= config.residual_tol;
  return out;
}

}  // namespace spiral
