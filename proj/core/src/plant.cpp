// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/plant.hpp"

#include "mrhinf/discretize.hpp"
#include "mrhinf/errors.hpp"
#include "mrhinf/lifting.hpp"
#include "mrhinf/sequence.hpp"

namespace mrhinf {

void DesignSpec::validate() const {
  if (h <= 0.0) throw InvalidSpec("sampling period h must be positive");
  if (m < 0) throw InvalidSpec("reconstruction delay m must be non-negative");
  if (n < 1) throw InvalidSpec("fast-discretization ratio n must be at least 1");
  if (!F.is_continuous()) throw InvalidSpec("signal model F must be continuous-time");
  if (F.input_count() != 1 || F.output_count() != 1) {
    throw InvalidSpec("signal model F must be SISO");
  }
  if (F.D().norm() != 0.0) throw InvalidSpec("signal model F must be strictly proper");
  if (!F.is_stable()) throw InvalidSpec("signal model F must be stable");
}

GeneralizedPlant build_plant(const DesignSpec& spec) {
  spec.validate();
  const int big_m = spec.pattern.segment_length();
  const int n = spec.n;
  const double tau = spec.h / n;

  const StateSpaceModel f_d = c2d_step_invariant(spec.F, tau);

  // G_{1,n}: the delayed signal path, lifted onto h-frames.
  const StateSpaceModel g1n = lift(series(f_d, delay(spec.m * n, tau)), n);

  // G_{2,n} = H, the hold column; G_{3,n} = S lift_n(F_d), the sample row.
  Eigen::MatrixXd hold_column = Eigen::MatrixXd::Ones(n, 1);
  Eigen::MatrixXd sample_row = Eigen::MatrixXd::Zero(1, n);
  sample_row(0, 0) = 1.0;
  const StateSpaceModel g3n = premultiply(sample_row, lift(f_d, n));

  // Second lifting onto M h frames and the selection of retained slots.
  StateSpaceModel g11 = lift(g1n, big_m);
  Eigen::MatrixXd g12_gain = Eigen::MatrixXd::Zero(n * big_m, big_m);
  for (int j = 0; j < big_m; ++j) g12_gain.block(j * n, j, n, 1) = -hold_column;
  StateSpaceModel g12 =
      StateSpaceModel::gain(g12_gain, TimeDomain::kDiscrete, spec.h * big_m);
  StateSpaceModel g21 = premultiply(selection_matrix(spec.pattern), lift(g3n, big_m));

  return GeneralizedPlant{std::move(g11), std::move(g12), std::move(g21),
                          n, big_m, spec.pattern.retained_count(), spec.m};
}

StateSpaceModel close_loop(const GeneralizedPlant& plant, const StateSpaceModel& k) {
  if (k.input_count() != plant.retained_count ||
      k.output_count() != plant.segment_length) {
    throw DimensionMismatch("filter must map N measurements to M outputs");
  }
  return add(plant.g11, series(plant.g12, series(k, plant.g21)));
}

}  // namespace mrhinf
