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

#include "spiral/optimizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "spiral/curve.hpp"
#include "spiral/error.hpp"
#include "spiral/refiner.hpp"

namespace spiral {

AngleSpline coeffs_from_uvp(const ExtendedUVP& uvp,
                            std::span<const double> knots,
                            const ExtensionFamily& family) {
  const std::size_t n = uvp.u.size();
  const std::size_t q = family.dimension;
  if (uvp.p.size() != n * q) {
    throw Error(ErrorKind::kInvalidArgument,
                "extension parameters must hold n * q values");
  }
  const AngleSpline base = coeffs_from_uv(UVParams{uvp.u, uvp.v}, knots);
  std::vector<CubicSegment> segs(base.segments().begin(),
                                 base.segments().end());
  for (std::size_t j = 0; j < n; ++j) {
    const std::span<const double> pj(uvp.p.data() + j * q, q);
    const double len = base.length(j);
    const double f = family.value(pj, len);
    const double ft = family.time_derivative(pj, len);
    const double l2 = len * len;
    if (j + 1 < n) {
      // Cancel the quartic term's value and slope at s = L.
      segs[j].c += f * l2 + ft * l2 * len;
      segs[j].d += -2.0 * f * len - ft * l2;
    } else {
      // Only the end slope needs cancelling on the last segment.
      segs[j].c += -2.0 * f * l2 - 0.5 * ft * l2 * len;
    }
  }
  return AngleSpline(std::vector<double>(knots.begin(), knots.end()),
                     std::move(segs))
      .with_extension(family, uvp.p);
}

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

Vector to_vector(std::span<const double> x) {
  return Eigen::Map<const Vector>(x.data(), static_cast<Index>(x.size()));
}

std::vector<double> to_std(const Vector& x) {
  return std::vector<double>(x.data(), x.data() + x.size());
}

// Energy and gap equations over z = (u, v, p L^4). Every coordinate is an
// angle in radians, so one step size and one finite-difference step fit all.
class ConstrainedEnergy {
 public:
  ConstrainedEnergy(const InterpolationProblem& problem,
                    const ExtensionFamily& family, std::vector<double> knots,
                    int subintervals, int energy_subintervals, double fd_step)
      : problem_(problem),
        family_(family),
        knots_(std::move(knots)),
        n_(knots_.size() - 1),
        subintervals_(subintervals),
        energy_subintervals_(energy_subintervals),
        fd_step_(fd_step),
        scale_(static_cast<Index>(n_ * family.dimension)) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double len = knots_[j + 1] - knots_[j];
      for (std::size_t k = 0; k < family.dimension; ++k) {
        scale_(static_cast<Index>(j * family.dimension + k)) =
            len * len * len * len;
      }
    }
  }

  std::size_t constraint_count() const { return 2 * n_; }
  std::size_t size() const { return 2 * n_ + static_cast<std::size_t>(scale_.size()); }
  int subintervals() const { return subintervals_; }
  void set_subintervals(int value) { subintervals_ = value; }

  Vector pack(std::span<const double> w, std::span<const double> p) const {
    Vector z(static_cast<Index>(size()));
    for (std::size_t i = 0; i < w.size(); ++i) z(static_cast<Index>(i)) = w[i];
    for (Index i = 0; i < scale_.size(); ++i) {
      z(static_cast<Index>(2 * n_) + i) = p[static_cast<std::size_t>(i)] * scale_(i);
    }
    return z;
  }

  AngleSpline build(const Vector& z) const {
    ExtendedUVP uvp;
    uvp.u.assign(z.data(), z.data() + n_);
    uvp.v.assign(z.data() + n_, z.data() + 2 * n_);
    uvp.p.resize(static_cast<std::size_t>(scale_.size()));
    for (Index i = 0; i < scale_.size(); ++i) {
      uvp.p[static_cast<std::size_t>(i)] = z(static_cast<Index>(2 * n_) + i) / scale_(i);
    }
    return coeffs_from_uvp(uvp, knots_, family_);
  }

  Vector gaps(const Vector& z) const {
    return to_vector(detail::gap_vector(build(z), problem_, subintervals_));
  }

  double energy(const Vector& z) const {
    return simpson_energy(build(z), energy_subintervals_);
  }

  // Central differences of the gaps and of the energy.
  void linearize(const Vector& z, Matrix& jac, Vector& grad) const {
    const auto m = static_cast<Index>(constraint_count());
    jac.resize(m, z.size());
    grad.resize(z.size());
    Vector probe = z;
    for (Index k = 0; k < z.size(); ++k) {
      probe(k) = z(k) + fd_step_;
      const Vector gp = gaps(probe);
      const double ep = energy(probe);
      probe(k) = z(k) - fd_step_;
      const Vector gm = gaps(probe);
      const double em = energy(probe);
      probe(k) = z(k);
      jac.col(k) = (gp - gm) / (2.0 * fd_step_);
      grad(k) = (ep - em) / (2.0 * fd_step_);
    }
  }

 private:
  const InterpolationProblem& problem_;
  const ExtensionFamily& family_;
  std::vector<double> knots_;
  std::size_t n_;
  int subintervals_;
  int energy_subintervals_;
  double fd_step_;
  Vector scale_;
};

// Split of z into variables solved from the gap equations and free ones.
struct Partition {
  std::vector<Index> dependent;
  std::vector<Index> free;
};

Matrix columns(const Matrix& a, const std::vector<Index>& idx) {
  Matrix out(a.rows(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.col(static_cast<Index>(k)) = a.col(idx[k]);
  }
  return out;
}

Vector entries(const Vector& x, const std::vector<Index>& idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out(static_cast<Index>(k)) = x(idx[k]);
  return out;
}

void scatter(Vector& x, const std::vector<Index>& idx, const Vector& values) {
  for (std::size_t k = 0; k < idx.size(); ++k) x(idx[k]) = values(static_cast<Index>(k));
}

// Best-conditioned choice of dependent columns, by pivoted QR.
Partition choose_partition(const Matrix& jac) {
  const Eigen::ColPivHouseholderQR<Matrix> qr(jac);
  const auto& perm = qr.colsPermutation().indices();
  Partition out;
  for (Index k = 0; k < jac.cols(); ++k) {
    (k < jac.rows() ? out.dependent : out.free).push_back(perm(k));
  }
  std::sort(out.dependent.begin(), out.dependent.end());
  std::sort(out.free.begin(), out.free.end());
  return out;
}

struct Linearization {
  Matrix jac;
  Vector grad;
  Eigen::PartialPivLU<Matrix> basis;  // factored dependent block
  Matrix sensitivity;                 // d(dependent)/d(free)
  Vector reduced;                     // energy gradient along the surface
};

Linearization linearize(const ConstrainedEnergy& problem, const Vector& z,
                        Partition& part, bool& repartitioned,
                        double min_rcond) {
  Linearization lin;
  problem.linearize(z, lin.jac, lin.grad);
  repartitioned = false;
  lin.basis.compute(columns(lin.jac, part.dependent));
  if (!(lin.basis.rcond() > min_rcond)) {
    part = choose_partition(lin.jac);
    repartitioned = true;
    lin.basis.compute(columns(lin.jac, part.dependent));
    if (!(lin.basis.rcond() > 1e-14)) {
      throw Error(ErrorKind::kSingularJacobian,
                  "gap equations are degenerate during optimisation");
    }
  }
  lin.sensitivity = -lin.basis.solve(columns(lin.jac, part.free));
  lin.reduced = entries(lin.grad, part.free) +
                lin.sensitivity.transpose() * entries(lin.grad, part.dependent);
  return lin;
}

// Solves the gap equations for the dependent variables of z. Chord steps
// with the factored block first, damped Newton if they stall.
bool restore(const ConstrainedEnergy& problem, Vector& z, const Partition& part,
             const Eigen::PartialPivLU<Matrix>& basis,
             const SolverConfig& solver) {
  Vector r = problem.gaps(z);
  double res = r.lpNorm<Eigen::Infinity>();
  for (int k = 0; k < 30 && res > solver.residual_tol; ++k) {
    Vector trial = z;
    scatter(trial, part.dependent,
            entries(trial, part.dependent) - basis.solve(r));
    const Vector rt = problem.gaps(trial);
    const double rtn = rt.lpNorm<Eigen::Infinity>();
    if (!(rtn < 0.5 * res)) break;
    z = std::move(trial);
    r = rt;
    res = rtn;
  }
  if (res <= solver.residual_tol) return true;

  const ResidualFn f = [&](std::span<const double> x) {
    Vector probe = z;
    scatter(probe, part.dependent, to_vector(x));
    return to_std(problem.gaps(probe));
  };
  try {
    NewtonResult out = damped_newton(f, to_std(entries(z, part.dependent)), solver);
    scatter(z, part.dependent, to_vector(out.x));
    return out.converged;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kSingularJacobian) throw;
    return false;
  }
}

}  // namespace

OptimizeResult optimize_energy(const BranchResult& seed,
                               const InterpolationProblem& problem,
                               const ExtensionFamily& family,
                               const QuadratureConfig& quad,
                               const SolverConfig& solver,
                               const OptimizerConfig& config) {
  quad.check();
  solver.check();
  if (!seed.refined || !seed.converged) {
    throw Error(ErrorKind::kNoConvergence,
                "optimisation needs a converged refined seed");
  }
  const AngleSpline& start = *seed.refined;
  const std::vector<double> knots(start.knots().begin(), start.knots().end());
  const std::size_t n = knots.size() - 1;
  ConstrainedEnergy target(problem, family, knots,
                           std::max(seed.subintervals, quad.simpson_subintervals),
                           config.energy_subintervals, config.fd_step);
  // Knot gaps accumulate along the curve, so each segment gets a share.
  SolverConfig inner = solver;
  inner.residual_tol = solver.residual_tol / (2.0 * static_cast<double>(n));

  Vector z = target.pack(uv_from_coeffs(start).flatten(),
                         std::vector<double>(n * family.dimension, 0.0));
  double energy = target.energy(z);
  OptimizeResult out{target.build(z), energy, energy, 0.0, 0,
                     target.subintervals()};

  // Start with (u, v) dependent and p free.
  Partition part;
  for (Index i = 0; i < z.size(); ++i) {
    (static_cast<std::size_t>(i) < 2 * n ? part.dependent : part.free).push_back(i);
  }
  bool repartitioned = false;
  Linearization lin = linearize(target, z, part, repartitioned, config.min_rcond);
  const auto nf = static_cast<Index>(part.free.size());
  Matrix inverse_hessian = Matrix::Identity(nf, nf);
  bool scaled = false;

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    if (lin.reduced.lpNorm<Eigen::Infinity>() < config.gradient_tol) break;
    Vector direction = -inverse_hessian * lin.reduced;
    if (direction.dot(lin.reduced) >= 0.0) {
      inverse_hessian.setIdentity();
      direction = -lin.reduced;
    }
    const double peak = direction.lpNorm<Eigen::Infinity>();
    if (peak > config.max_step) direction *= config.max_step / peak;
    const double slope = direction.dot(lin.reduced);

    double alpha = 1.0;
    bool accepted = false;
    Vector trial;
    double trial_energy = energy;
    for (int h = 0; h < 30; ++h) {
      const Vector step = alpha * direction;
      trial = z;
      scatter(trial, part.free, entries(z, part.free) + step);
      const Vector predicted =
          entries(z, part.dependent) + lin.sensitivity * step;
      scatter(trial, part.dependent, predicted);
      // A large correction means the solve landed on some other solution of
      // the gap equations; stay on the seed's sheet.
      if (restore(target, trial, part, lin.basis, inner) &&
          (entries(trial, part.dependent) - predicted)
                  .lpNorm<Eigen::Infinity>() <= config.max_correction) {
        trial_energy = target.energy(trial);
        if (trial_energy <= energy + 1e-4 * alpha * slope) {
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    const Partition before = part;
    const Vector old_reduced = lin.reduced;
    Linearization next = linearize(target, trial, part, repartitioned, config.min_rcond);
    if (repartitioned) {
      inverse_hessian.setIdentity();
      scaled = false;
    } else {
      const Vector step = entries(trial, part.free) - entries(z, before.free);
      const Vector change = next.reduced - old_reduced;
      const double curvature = step.dot(change);
      if (curvature > 1e-14) {
        if (!scaled) {
          inverse_hessian *= curvature / change.squaredNorm();
          scaled = true;
        }
        const double rho = 1.0 / curvature;
        const Matrix eye = Matrix::Identity(nf, nf);
        inverse_hessian = (eye - rho * step * change.transpose()) *
                              inverse_hessian *
                              (eye - rho * change * step.transpose()) +
                          rho * step * step.transpose();
      }
    }
    const double decrease = energy - trial_energy;
    z = std::move(trial);
    energy = trial_energy;
    lin = std::move(next);
    ++out.iterations;
    if (decrease < config.energy_tol * (1.0 + std::abs(energy))) break;
  }

  // Confirm feasibility at higher resolution, refining the grid if needed.
  auto measure = [&] {
    return interpolation_residual(
        target.build(z), problem,
        QuadratureConfig{target.subintervals(), quad.max_subintervals});
  };
  double residual = measure();
  while (residual > solver.residual_tol &&
         target.subintervals() * 2 <= quad.max_subintervals) {
    target.set_subintervals(target.subintervals() * 2);
    lin = linearize(target, z, part, repartitioned, config.min_rcond);
    restore(target, z, part, lin.basis, inner);
    residual = measure();
  }
  if (residual > solver.residual_tol) {
    throw Error(ErrorKind::kConstraintViolated,
                "optimised spline leaves a gap of " + std::to_string(residual));
  }
  out.spline = target.build(z);
  out.energy = target.energy(z);
  out.residual = residual;
  out.subintervals = target.subintervals();
  return out;
}

}  // namespace spiral
