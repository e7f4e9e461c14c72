// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mrhinf/state_space.hpp"

namespace mrhinf {

/// Step-invariant (hold-sample) discretization of a continuous model at
/// period tau: (e^{A tau}, integral_0^tau e^{At} dt B, C, D).
StateSpaceModel c2d_step_invariant(const StateSpaceModel& f, double tau);

}  // namespace mrhinf
