// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/discretize.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "mrhinf/errors.hpp"

namespace mrhinf {

StateSpaceModel c2d_step_invariant(const StateSpaceModel& f, double tau) {
  if (!f.is_continuous()) {
    throw NonContinuousInput("c2d_step_invariant requires a continuous model");
  }
  if (tau <= 0.0) throw InvalidPeriod("discretization period must be positive");

  const Eigen::Index n = f.state_count();
  const Eigen::Index m = f.input_count();

  // One matrix exponential of the augmented block matrix yields both the
  // transition matrix and the held-input integral:
  //   exp([A B; 0 0] tau) = [e^{A tau}  int_0^tau e^{At} dt B; 0  I].
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = f.A();
  aug.topRightCorner(n, m) = f.B();
  Eigen::MatrixXd expm = (aug * tau).exp();

  return StateSpaceModel::discrete(expm.topLeftCorner(n, n), expm.topRightCorner(n, m),
                                   f.C(), f.D(), tau);
}

}  // namespace mrhinf
