// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "mrhinf/state_space.hpp"

namespace mrhinf {

struct FrequencyPoint {
  double omega;  // rad/sample, in [0, pi]
  double gain;   // largest singular value at e^{j omega}
};

struct FrequencyResponseCurve {
  std::vector<FrequencyPoint> points;
};

/// Transfer matrix C (zI - A)^{-1} B + D at the complex point z.
Eigen::MatrixXcd transfer_at(const StateSpaceModel& g, std::complex<double> z);

/// Largest singular value of the transfer matrix at e^{j omega}.
double gain_at(const StateSpaceModel& g, double omega);

/// H-infinity norm of a stable discrete system by gamma bisection.
///
/// A candidate gamma is rejected exactly when the bounded-real symplectic
/// pencil has a generalized eigenvalue on the unit circle, which happens iff
/// some singular value of the frequency response crosses gamma. The bracket
/// starts from a frequency-grid lower bound and a Hankel-type upper bound
/// sigma_max(D) + 2 sum(Hankel singular values).
double hinf_norm(const StateSpaceModel& g, double rel_tol = 1e-6);

/// Largest-singular-value curve on a uniform grid over [0, pi]. Grid points
/// where the resolvent is singular are skipped.
FrequencyResponseCurve frequency_response(const StateSpaceModel& g, int n_points);

/// Controllability Gramian P solving A P A' - P + B B' = 0 (discrete,
/// stable A), by doubling iteration.
Eigen::MatrixXd discrete_gramian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace mrhinf
