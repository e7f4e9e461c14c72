// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/lifting.hpp"

#include <vector>

#include "mrhinf/errors.hpp"

namespace mrhinf {

StateSpaceModel lift(const StateSpaceModel& g, int n) {
  if (!g.is_discrete()) throw NonDiscreteInput("lift requires a discrete model");
  if (n < 1) throw InvalidCounts("lift factor must be at least 1");
  if (n == 1) return g;

  const Eigen::Index nx = g.state_count();
  const Eigen::Index nu = g.input_count();
  const Eigen::Index ny = g.output_count();

  // Powers A^0 .. A^n by repeated multiplication; n stays small in practice.
  std::vector<Eigen::MatrixXd> apow(static_cast<std::size_t>(n) + 1);
  apow[0] = Eigen::MatrixXd::Identity(nx, nx);
  for (int k = 1; k <= n; ++k) apow[k] = apow[k - 1] * g.A();

  Eigen::MatrixXd A = apow[n];
  Eigen::MatrixXd B(nx, n * nu);
  for (int j = 0; j < n; ++j) B.middleCols(j * nu, nu) = apow[n - 1 - j] * g.B();

  Eigen::MatrixXd C(n * ny, nx);
  for (int i = 0; i < n; ++i) C.middleRows(i * ny, ny) = g.C() * apow[i];

  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n * ny, n * nu);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (i == j) {
        D.block(i * ny, j * nu, ny, nu) = g.D();
      } else {
        D.block(i * ny, j * nu, ny, nu) = g.C() * apow[i - j - 1] * g.B();
      }
    }
  }

  return StateSpaceModel::discrete(std::move(A), std::move(B), std::move(C), std::move(D),
                                   g.period() * n);
}

}  // namespace mrhinf
