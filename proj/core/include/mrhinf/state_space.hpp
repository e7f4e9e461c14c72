// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <vector>

namespace mrhinf {

enum class TimeDomain { kContinuous, kDiscrete };

/// A real state-space model (A, B, C, D) tagged with its time domain.
/// Discrete models carry their sampling period. A zero-state model is a
/// plain gain D.
class StateSpaceModel {
 public:
  StateSpaceModel(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd C,
                  Eigen::MatrixXd D, TimeDomain domain, double period = 0.0);

  static StateSpaceModel continuous(Eigen::MatrixXd A, Eigen::MatrixXd B,
                                    Eigen::MatrixXd C, Eigen::MatrixXd D);
  static StateSpaceModel discrete(Eigen::MatrixXd A, Eigen::MatrixXd B,
                                  Eigen::MatrixXd C, Eigen::MatrixXd D,
                                  double period);
  /// A static gain y = D u.
  static StateSpaceModel gain(const Eigen::MatrixXd& D, TimeDomain domain,
                              double period = 0.0);

  const Eigen::MatrixXd& A() const { return a_; }
  const Eigen::MatrixXd& B() const { return b_; }
  const Eigen::MatrixXd& C() const { return c_; }
  const Eigen::MatrixXd& D() const { return d_; }

  Eigen::Index state_count() const { return a_.rows(); }
  Eigen::Index input_count() const { return b_.cols(); }
  Eigen::Index output_count() const { return c_.rows(); }

  TimeDomain domain() const { return domain_; }
  bool is_discrete() const { return domain_ == TimeDomain::kDiscrete; }
  bool is_continuous() const { return domain_ == TimeDomain::kContinuous; }
  double period() const { return period_; }

  Eigen::VectorXcd poles() const;

  /// Continuous: all eigenvalues in the open left half-plane.
  /// Discrete: all eigenvalues strictly inside the unit disc.
  /// `margin` shrinks the stability region by that amount.
  bool is_stable(double margin = 0.0) const;

 private:
  Eigen::MatrixXd a_, b_, c_, d_;
  TimeDomain domain_;
  double period_;
};

/// Cascade: the input feeds `h`, whose output feeds `g` (realizes g*h).
StateSpaceModel series(const StateSpaceModel& g, const StateSpaceModel& h);

/// Parallel sum g + h of systems with identical I/O dimensions.
StateSpaceModel add(const StateSpaceModel& g, const StateSpaceModel& h);

/// The k-step shift register with transfer z^-k; delay(0) is unity gain.
StateSpaceModel delay(int k, double period = 1.0);

/// Static output transform: gain * g.
StateSpaceModel premultiply(const Eigen::MatrixXd& gain, const StateSpaceModel& g);

/// Static input transform: g * gain.
StateSpaceModel postmultiply(const StateSpaceModel& g, const Eigen::MatrixXd& gain);

StateSpaceModel scale(const StateSpaceModel& g, double factor);

/// Drives a discrete model from rest with the given input vectors.
std::vector<Eigen::VectorXd> simulate(const StateSpaceModel& g,
                                      const std::vector<Eigen::VectorXd>& inputs);

/// SISO convenience overload.
std::vector<double> simulate(const StateSpaceModel& g, const std::vector<double>& inputs);

}  // namespace mrhinf
