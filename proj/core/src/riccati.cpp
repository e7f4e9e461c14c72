// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/riccati.hpp"

#include <lapacke.h>

#include <Eigen/LU>
#include <cmath>
#include <limits>

#include "mrhinf/errors.hpp"

namespace mrhinf {

namespace {

extern "C" {
lapack_logical select_inside_unit_circle(const double* ar, const double* ai,
                                         const double* beta) {
  return std::sqrt((*ar) * (*ar) + (*ai) * (*ai)) < std::fabs(*beta);
}
}

// Assembles the extended symplectic pencil (M, L) of the DARE.
void build_pencil(const DareProblem& p, Eigen::MatrixXd& m, Eigen::MatrixXd& l) {
  const Eigen::Index n = p.A.rows();
  const Eigen::Index nu = p.B.cols();
  const Eigen::Index dim = 2 * n + nu;

  m = Eigen::MatrixXd::Zero(dim, dim);
  m.topLeftCorner(n, n) = p.A;
  m.topRightCorner(n, nu) = p.B;
  m.block(n, 0, n, n) = -p.Q;
  m.block(n, n, n, n) = Eigen::MatrixXd::Identity(n, n);
  m.block(n, 2 * n, n, nu) = -p.S;
  m.block(2 * n, 0, nu, n) = p.S.transpose();
  m.bottomRightCorner(nu, nu) = p.R;

  l = Eigen::MatrixXd::Zero(dim, dim);
  l.topLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  l.block(n, n, n, n) = p.A.transpose();
  l.block(2 * n, n, nu, n) = -p.B.transpose();
}

}  // namespace

std::vector<std::complex<double>> pencil_eigenvalues(const Eigen::MatrixXd& m,
                                                     const Eigen::MatrixXd& l) {
  if (m.rows() != m.cols() || l.rows() != l.cols() || m.rows() != l.rows()) {
    throw DimensionMismatch("pencil matrices must be square and equal-sized");
  }
  const lapack_int n = static_cast<lapack_int>(m.rows());
  if (n == 0) return {};

  Eigen::MatrixXd a = m;
  Eigen::MatrixXd b = l;
  Eigen::VectorXd ar(n), ai(n), beta(n);
  Eigen::MatrixXd vl_dummy(1, 1), vr_dummy(1, 1);
  lapack_int info =
      LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, b.data(), n, ar.data(),
                    ai.data(), beta.data(), vl_dummy.data(), 1, vr_dummy.data(), 1);
  if (info != 0) throw RiccatiFailure("dggev failed on the pencil");

  std::vector<std::complex<double>> eigs;
  eigs.reserve(static_cast<std::size_t>(n));
  const double huge = std::numeric_limits<double>::max() / 4.0;
  for (lapack_int i = 0; i < n; ++i) {
    if (beta(i) == 0.0) {
      eigs.emplace_back(huge, 0.0);
    } else {
      eigs.emplace_back(ar(i) / beta(i), ai(i) / beta(i));
    }
  }
  return eigs;
}

DareSolution solve_dare(const DareProblem& prob) {
  DareSolution sol;
  const Eigen::Index n = prob.A.rows();
  const Eigen::Index nu = prob.B.cols();
  if (prob.A.cols() != n || prob.B.rows() != n || prob.Q.rows() != n ||
      prob.Q.cols() != n || prob.S.rows() != n || prob.S.cols() != nu ||
      prob.R.rows() != nu || prob.R.cols() != nu) {
    throw DimensionMismatch("inconsistent DARE dimensions");
  }
  if (n == 0) {
    sol.solved = true;
    sol.X = Eigen::MatrixXd::Zero(0, 0);
    sol.gain = Eigen::MatrixXd::Zero(nu, 0);
    return sol;
  }

  Eigen::MatrixXd m, l;
  build_pencil(prob, m, l);

  const lapack_int dim = static_cast<lapack_int>(2 * n + nu);
  Eigen::VectorXd ar(dim), ai(dim), beta(dim);
  Eigen::MatrixXd vsr(dim, dim);
  Eigen::MatrixXd vsl_dummy(1, 1);
  lapack_int sdim = 0;
  lapack_int info = LAPACKE_dgges(LAPACK_COL_MAJOR, 'N', 'V', 'S',
                                  select_inside_unit_circle, dim, m.data(), dim, l.data(),
                                  dim, &sdim, ar.data(), ai.data(), beta.data(),
                                  vsl_dummy.data(), 1, vsr.data(), dim);
  if (info != 0) {
    sol.failure = "qz factorization failed (info=" + std::to_string(info) + ")";
    return sol;
  }
  if (sdim != static_cast<lapack_int>(n)) {
    sol.failure = "pencil has " + std::to_string(sdim) + " stable eigenvalues, expected " +
                  std::to_string(n);
    return sol;
  }

  // Right deflating subspace basis [U1; U2; U3]; then X = U2 U1^{-1} and
  // F = U3 U1^{-1}.
  Eigen::MatrixXd u1 = vsr.block(0, 0, n, n);
  Eigen::MatrixXd u2 = vsr.block(n, 0, n, n);
  Eigen::MatrixXd u3 = vsr.block(2 * n, 0, nu, n);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(u1);
  if (!lu.isInvertible()) {
    sol.failure = "deflating subspace is singular in the state block";
    return sol;
  }
  // Guard against near-singular U1 producing an unbounded solution.
  const double rcond_like =
      lu.matrixLU().diagonal().cwiseAbs().minCoeff() /
      std::max(lu.matrixLU().diagonal().cwiseAbs().maxCoeff(), 1e-300);
  if (rcond_like < 1e-13) {
    sol.failure = "deflating subspace state block is numerically singular";
    return sol;
  }

  Eigen::MatrixXd u1_inv = lu.inverse();
  Eigen::MatrixXd x = u2 * u1_inv;
  sol.X = 0.5 * (x + x.transpose());
  sol.gain = u3 * u1_inv;
  if (!sol.X.allFinite() || !sol.gain.allFinite()) {
    sol.failure = "non-finite Riccati solution";
    sol.X.resize(0, 0);
    return sol;
  }
  sol.solved = true;
  return sol;
}

}  // namespace mrhinf
