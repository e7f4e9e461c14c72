// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <vector>

namespace mrhinf {

/// Generalized eigenvalues of the pencil (M - lambda L). Infinite
/// eigenvalues are reported with a huge magnitude.
std::vector<std::complex<double>> pencil_eigenvalues(const Eigen::MatrixXd& m,
                                                     const Eigen::MatrixXd& l);

/// Data of the discrete-time algebraic Riccati equation
///   X = A'XA + Q - (A'XB + S)(R + B'XB)^{-1}(B'XA + S')
/// where R may be indefinite (game/bounded-real form).
struct DareProblem {
  Eigen::MatrixXd A;  // n x n
  Eigen::MatrixXd B;  // n x m
  Eigen::MatrixXd Q;  // n x n, symmetric
  Eigen::MatrixXd S;  // n x m
  Eigen::MatrixXd R;  // m x m, symmetric
};

struct DareSolution {
  bool solved = false;
  std::string failure;  // diagnostic when !solved
  Eigen::MatrixXd X;    // symmetric stabilizing solution
  Eigen::MatrixXd gain; // F (m x n) with A + B F having all |eig| < 1
};

/// Solves the DARE through the stable deflating subspace of the extended
/// symplectic pencil
///   M = [A 0 B; -Q I -S; S' 0 R],  L = [I 0 0; 0 A' 0; 0 -B' 0],
/// computed with a reordered generalized Schur (QZ) decomposition. Fails
/// (with a reason) when the pencil does not split into exactly n stable
/// eigenvalues or the subspace does not define a bounded solution.
DareSolution solve_dare(const DareProblem& prob);

}  // namespace mrhinf
