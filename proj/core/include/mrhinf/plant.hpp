// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mrhinf/pattern.hpp"
#include "mrhinf/state_space.hpp"

namespace mrhinf {

/// Full description of one interpolation design problem.
struct DesignSpec {
  DecimationPattern pattern;
  double h = 1.0;      // sampling period, seconds
  int m = 0;           // reconstruction delay in samples (L = m h)
  int n = 1;           // fast-discretization ratio
  StateSpaceModel F;   // continuous SISO signal model, stable, strictly proper

  /// Throws InvalidSpec when a field violates its contract.
  void validate() const;
};

/// The 2x2-partitioned discrete plant whose lower LFT with the filter is the
/// fast-discretized error system: channels w (n M), u (M), e (n M), y (N),
/// all blocks sharing period M h. The u -> e block is static.
struct GeneralizedPlant {
  StateSpaceModel g11;  // w -> e
  StateSpaceModel g12;  // u -> e (static, minus sign of the error junction folded in)
  StateSpaceModel g21;  // w -> y
  int fast_ratio;       // n
  int segment_length;   // M
  int retained_count;   // N
  int delay_steps;      // m
};

/// Assembles the plant by step-invariant discretization at h/n, a front
/// delay of m n fast samples, double lifting (by n, then by M), and the
/// retained-slot selection on the measurement side.
GeneralizedPlant build_plant(const DesignSpec& spec);

/// Closed error map g11 + g12 K g21 for a filter K with N inputs and M
/// outputs.
StateSpaceModel close_loop(const GeneralizedPlant& plant, const StateSpaceModel& k);

}  // namespace mrhinf
