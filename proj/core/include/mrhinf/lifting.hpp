// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mrhinf/state_space.hpp"

namespace mrhinf {

/// Discrete lifting: reblocks a discrete system onto n-sample frames.
///
/// The lifted model advances n steps per frame:
///   A^n, [A^{n-1}B ... B], [C; CA; ...; CA^{n-1}],
/// with a block lower-triangular feedthrough whose (i, j) block is D on the
/// diagonal and C A^{i-j-1} B below it. Channel counts and the period are
/// multiplied by n; lifting is an isometry for the H-infinity norm.
StateSpaceModel lift(const StateSpaceModel& g, int n);

}  // namespace mrhinf
