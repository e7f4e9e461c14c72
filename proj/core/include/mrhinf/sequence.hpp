// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "mrhinf/pattern.hpp"

namespace mrhinf {

/// A finite window of a scalar discrete-time signal {x_0, x_1, ...}.
/// `start_index` is the absolute time of the first stored sample, so a
/// sequence models a contiguous slice of the conceptual infinite signal.
struct SignalSequence {
  std::vector<double> samples;
  std::size_t start_index = 0;

  std::size_t size() const { return samples.size(); }
};

/// Keeps the samples whose absolute index lands on a retained slot of the
/// pattern. A trailing partial segment keeps whatever retained positions
/// exist.
SignalSequence decimate(const SignalSequence& x, const DecimationPattern& p);

/// Inverse placement: writes each group of N retained samples back into an
/// M-long segment, zeros elsewhere. A trailing partial group emits the
/// segment only up to the last covered slot.
SignalSequence expand(const SignalSequence& y, const DecimationPattern& p);

/// The N x M selection matrix with row k picking retained position i_k.
/// Satisfies E * E^T = I_N.
Eigen::MatrixXd selection_matrix(const DecimationPattern& p);

/// Polyphase blocking: groups m consecutive samples into column vectors.
/// The length must be divisible by m; callers truncate beforehand.
std::vector<Eigen::VectorXd> block(const SignalSequence& x, int m);

/// Concatenates blocked vectors back into a scalar sequence starting at 0.
SignalSequence unblock(const std::vector<Eigen::VectorXd>& v);

}  // namespace mrhinf
