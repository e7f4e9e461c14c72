// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "mrhinf/plant.hpp"
#include "mrhinf/state_space.hpp"

namespace mrhinf {

struct GammaIteration {
  double gamma;
  bool feasible;
};

struct SynthesisOptions {
  double gamma_rel_tol = 1e-4;   // bisection stops at this relative width
  double reg_epsilon = 1e-6;     // fictitious measurement-noise magnitude
  double norm_rel_tol = 1e-6;    // tolerance of the final norm evaluation
  int max_bracket_doublings = 40;
};

struct SynthesisResult {
  StateSpaceModel filter;  // N inputs -> M outputs at the block rate M h
  double gamma = 0.0;      // certified closed-loop bound from the iteration
  double J = 0.0;          // independently recomputed norm of the closed loop
  std::vector<GammaIteration> iterations;
};

/// Solves the standard discrete-time H-infinity problem for the plant by
/// gamma bisection. Each candidate gamma is tested by solving two
/// game-type Riccati equations (full-information and output-estimation);
/// the central controller is reconstructed at the final feasible gamma and
/// the achieved norm is re-verified on the unregularized closed loop.
SynthesisResult hinf_synthesize(const GeneralizedPlant& plant,
                                const SynthesisOptions& options = {});

}  // namespace mrhinf
