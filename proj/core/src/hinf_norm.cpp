// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/hinf_norm.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "mrhinf/errors.hpp"
#include "mrhinf/riccati.hpp"

namespace mrhinf {

namespace {

constexpr double kUnitCircleTol = 1e-8;

double sigma_max(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

// True iff some singular value of the response equals gamma at some
// frequency, detected through unit-circle eigenvalues of the bounded-real
// pencil with Q = C'C, S = C'D, R = D'D - gamma^2 I.
bool crosses_level(const StateSpaceModel& g, double gamma) {
  const Eigen::Index n = g.state_count();
  const Eigen::Index m = g.input_count();
  Eigen::MatrixXd q = g.C().transpose() * g.C();
  Eigen::MatrixXd s = g.C().transpose() * g.D();
  Eigen::MatrixXd r = g.D().transpose() * g.D()
      - gamma * gamma * Eigen::MatrixXd::Identity(m, m);

  const Eigen::Index dim = 2 * n + m;
  Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(dim, dim);
  pm.topLeftCorner(n, n) = g.A();
  pm.topRightCorner(n, m) = g.B();
  pm.block(n, 0, n, n) = -q;
  pm.block(n, n, n, n) = Eigen::MatrixXd::Identity(n, n);
  pm.block(n, 2 * n, n, m) = -s;
  pm.block(2 * n, 0, m, n) = s.transpose();
  pm.bottomRightCorner(m, m) = r;

  Eigen::MatrixXd pl = Eigen::MatrixXd::Zero(dim, dim);
  pl.topLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  pl.block(n, n, n, n) = g.A().transpose();
  pl.block(2 * n, n, m, n) = -g.B().transpose();

  for (const auto& lambda : pencil_eigenvalues(pm, pl)) {
    if (std::abs(std::abs(lambda) - 1.0) < kUnitCircleTol) return true;
  }
  return false;
}

}  // namespace

Eigen::MatrixXcd transfer_at(const StateSpaceModel& g, std::complex<double> z) {
  if (g.state_count() == 0) return g.D().cast<std::complex<double>>();
  Eigen::MatrixXcd zi =
      z * Eigen::MatrixXcd::Identity(g.state_count(), g.state_count()) -
      g.A().cast<std::complex<double>>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(zi);
  Eigen::MatrixXcd x = lu.solve(g.B().cast<std::complex<double>>());
  return g.C().cast<std::complex<double>>() * x + g.D().cast<std::complex<double>>();
}

double gain_at(const StateSpaceModel& g, double omega) {
  const std::complex<double> z(std::cos(omega), std::sin(omega));
  return transfer_at(g, z).jacobiSvd().singularValues()(0);
}

Eigen::MatrixXd discrete_gramian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd p = b * b.transpose();
  Eigen::MatrixXd ak = a;
  for (int it = 0; it < 120; ++it) {
    Eigen::MatrixXd update = ak * p * ak.transpose();
    p += update;
    if (update.norm() <= 1e-16 * p.norm()) break;
    ak = ak * ak;
    if (!ak.allFinite()) throw UnstableSystem("Gramian iteration diverged");
  }
  return 0.5 * (p + p.transpose());
}

double hinf_norm(const StateSpaceModel& g, double rel_tol) {
  if (!g.is_discrete()) throw NonDiscreteInput("hinf_norm requires a discrete model");
  if (rel_tol <= 0.0) throw InvalidCounts("hinf_norm tolerance must be positive");
  if (g.state_count() == 0 || g.B().norm() == 0.0 || g.C().norm() == 0.0) {
    return sigma_max(g.D());
  }
  if (!g.is_stable()) throw UnstableSystem("hinf_norm requires a stable model");

  // Certified lower bound from a frequency grid (always <= the norm).
  double lo = sigma_max(g.D());
  const int grid = 256;
  for (int k = 0; k <= grid; ++k) {
    lo = std::max(lo, gain_at(g, std::numbers::pi * k / grid));
  }

  // Hankel-type upper bound: sigma_max(D) + 2 sum sigma_H.
  Eigen::MatrixXd p = discrete_gramian(g.A(), g.B());
  Eigen::MatrixXd q = discrete_gramian(g.A().transpose(), g.C().transpose());
  Eigen::VectorXcd pq_eigs = (p * q).eigenvalues();
  double hankel_sum = 0.0;
  for (Eigen::Index i = 0; i < pq_eigs.size(); ++i) {
    hankel_sum += std::sqrt(std::max(0.0, pq_eigs(i).real()));
  }
  double hi = sigma_max(g.D()) + 2.0 * hankel_sum;

  if (lo == 0.0 && hi == 0.0) return 0.0;
  hi = std::max(hi, lo * (1.0 + 10.0 * rel_tol));

  // The upper bound must clear the level set; expand if roundoff left it
  // marginal.
  int expansions = 0;
  while (crosses_level(g, hi)) {
    hi *= 2.0;
    if (++expansions > 60) throw BracketFailure("no valid upper bound for hinf_norm");
  }

  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (crosses_level(g, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

FrequencyResponseCurve frequency_response(const StateSpaceModel& g, int n_points) {
  if (!g.is_discrete()) {
    throw NonDiscreteInput("frequency_response requires a discrete model");
  }
  if (n_points < 2) throw InvalidCounts("frequency_response needs at least 2 points");
  FrequencyResponseCurve curve;
  curve.points.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double omega = std::numbers::pi * k / (n_points - 1);
    const std::complex<double> z(std::cos(omega), std::sin(omega));
    Eigen::MatrixXcd h;
    try {
      h = transfer_at(g, z);
    } catch (const Error&) {
      continue;  // singular resolvent at this grid point: skip
    }
    if (!h.allFinite()) continue;
    curve.points.push_back({omega, h.jacobiSvd().singularValues()(0)});
  }
  return curve;
}

}  // namespace mrhinf
