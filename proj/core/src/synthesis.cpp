// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/synthesis.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <optional>

#include "mrhinf/errors.hpp"
#include "mrhinf/hinf_norm.hpp"
#include "mrhinf/riccati.hpp"

namespace mrhinf {

namespace {

// Joint realization of the partitioned plant. The u -> e block is static,
// so the control enters through D12 only.
struct StandardPlant {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B1, B2;
  Eigen::MatrixXd C1, C2;
  Eigen::MatrixXd D11, D12, D21;
  double period = 1.0;

  Eigen::Index states() const { return A.rows(); }
  Eigen::Index m1() const { return B1.cols(); }
  Eigen::Index m2() const { return B2.cols(); }
  Eigen::Index p1() const { return C1.rows(); }
  Eigen::Index p2() const { return C2.rows(); }
};

StandardPlant assemble(const GeneralizedPlant& plant, double reg_epsilon) {
  const auto& g11 = plant.g11;
  const auto& g21 = plant.g21;
  const Eigen::Index n1 = g11.state_count();
  const Eigen::Index n3 = g21.state_count();
  const Eigen::Index nw = g11.input_count();
  const Eigen::Index ny = g21.output_count();

  StandardPlant p;
  p.period = g11.period();
  p.A = Eigen::MatrixXd::Zero(n1 + n3, n1 + n3);
  p.A.topLeftCorner(n1, n1) = g11.A();
  p.A.bottomRightCorner(n3, n3) = g21.A();

  // The fictitious measurement-noise channel keeps D21 full row rank when a
  // retained slot coincides with the strictly proper model's zero
  // feedthrough.
  p.B1 = Eigen::MatrixXd::Zero(n1 + n3, nw + ny);
  p.B1.topLeftCorner(n1, nw) = g11.B();
  p.B1.block(n1, 0, n3, nw) = g21.B();
  p.B2 = Eigen::MatrixXd::Zero(n1 + n3, plant.g12.input_count());

  p.C1 = Eigen::MatrixXd::Zero(g11.output_count(), n1 + n3);
  p.C1.leftCols(n1) = g11.C();
  p.D11 = Eigen::MatrixXd::Zero(g11.output_count(), nw + ny);
  p.D11.leftCols(nw) = g11.D();
  p.D12 = plant.g12.D();

  p.C2 = Eigen::MatrixXd::Zero(ny, n1 + n3);
  p.C2.rightCols(n3) = g21.C();
  p.D21 = Eigen::MatrixXd::Zero(ny, nw + ny);
  p.D21.leftCols(nw) = g21.D();
  p.D21.rightCols(ny) = reg_epsilon * Eigen::MatrixXd::Identity(ny, ny);
  return p;
}

bool positive_definite(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return true;
  Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (m + m.transpose()));
  return llt.info() == Eigen::Success;
}

struct CentralController {
  Eigen::MatrixXd A, B, C, D;
};

// One feasibility probe of the gamma-iteration. Solves the full-information
// game DARE, transforms the residual problem into an output-estimation one,
// and solves its dual DARE. When both succeed with the required sign
// pattern, the central controller
//   xhat+ = A_bar xhat + B2 u + L (y - C2_bar xhat)
//   u     = Fu xhat + Theta (y - C2_bar xhat)
// achieves the closed-loop bound gamma.
std::optional<CentralController> probe_gamma(const StandardPlant& p, double gamma) {
  const Eigen::Index n = p.states();
  const Eigen::Index m1 = p.m1();
  const Eigen::Index m2 = p.m2();
  const Eigen::Index p2 = p.p2();

  // Full-information DARE in (w, u).
  DareProblem x_prob;
  x_prob.A = p.A;
  x_prob.B = Eigen::MatrixXd(n, m1 + m2);
  x_prob.B << p.B1, p.B2;
  Eigen::MatrixXd d1 = Eigen::MatrixXd(p.p1(), m1 + m2);
  d1 << p.D11, p.D12;
  x_prob.Q = p.C1.transpose() * p.C1;
  x_prob.S = p.C1.transpose() * d1;
  x_prob.R = d1.transpose() * d1;
  x_prob.R.topLeftCorner(m1, m1) -=
      gamma * gamma * Eigen::MatrixXd::Identity(m1, m1);

  DareSolution x_sol = solve_dare(x_prob);
  if (!x_sol.solved) return std::nullopt;

  Eigen::MatrixXd r_blk = x_prob.R + x_prob.B.transpose() * x_sol.X * x_prob.B;
  Eigen::MatrixXd r11 = r_blk.topLeftCorner(m1, m1);
  Eigen::MatrixXd r12 = r_blk.topRightCorner(m1, m2);
  Eigen::MatrixXd r22 = r_blk.bottomRightCorner(m2, m2);
  if (!positive_definite(r22)) return std::nullopt;

  Eigen::LLT<Eigen::MatrixXd> r22_llt(0.5 * (r22 + r22.transpose()));
  Eigen::MatrixXd schur_w = r11 - r12 * r22_llt.solve(r12.transpose());
  if (!positive_definite(-schur_w)) return std::nullopt;

  Eigen::MatrixXd fw = x_sol.gain.topRows(m1);
  Eigen::MatrixXd fu = x_sol.gain.bottomRows(m2);

  // Symmetric square roots used by the loop transformation.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sw_eig(-schur_w);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> r22_eig(0.5 * (r22 + r22.transpose()));
  if (sw_eig.eigenvalues().minCoeff() <= 0.0 || r22_eig.eigenvalues().minCoeff() <= 0.0) {
    return std::nullopt;
  }
  Eigen::MatrixXd sw_inv_sqrt = sw_eig.operatorInverseSqrt();
  Eigen::MatrixXd r22_sqrt = r22_eig.operatorSqrt();
  Eigen::MatrixXd r22_inv_sqrt = r22_eig.operatorInverseSqrt();

  // Output-estimation problem driven by the worst-case deviation.
  Eigen::MatrixXd a_bar = p.A + p.B1 * fw;
  Eigen::MatrixXd b1_t = p.B1 * sw_inv_sqrt;
  Eigen::MatrixXd c1_t = -r22_sqrt * fu;
  Eigen::MatrixXd d11_t = r22_inv_sqrt * r12.transpose() * sw_inv_sqrt;
  Eigen::MatrixXd c2_bar = p.C2 + p.D21 * fw;
  Eigen::MatrixXd d21_t = p.D21 * sw_inv_sqrt;

  // Dual full-information DARE of the transformed plant (target norm 1).
  DareProblem y_prob;
  y_prob.A = a_bar.transpose();
  y_prob.B = Eigen::MatrixXd(n, m2 + p2);
  y_prob.B << c1_t.transpose(), c2_bar.transpose();
  Eigen::MatrixXd d1_dual = Eigen::MatrixXd(m1, m2 + p2);
  d1_dual << d11_t.transpose(), d21_t.transpose();
  y_prob.Q = b1_t * b1_t.transpose();
  y_prob.S = b1_t * d1_dual;
  y_prob.R = d1_dual.transpose() * d1_dual;
  y_prob.R.topLeftCorner(m2, m2) -= Eigen::MatrixXd::Identity(m2, m2);

  DareSolution y_sol = solve_dare(y_prob);
  if (!y_sol.solved) return std::nullopt;

  Eigen::MatrixXd ry_blk = y_prob.R + y_prob.B.transpose() * y_sol.X * y_prob.B;
  Eigen::MatrixXd ry11 = ry_blk.topLeftCorner(m2, m2);
  Eigen::MatrixXd ry12 = ry_blk.topRightCorner(m2, p2);
  Eigen::MatrixXd ry22 = ry_blk.bottomRightCorner(p2, p2);
  if (!positive_definite(ry22)) return std::nullopt;
  Eigen::LLT<Eigen::MatrixXd> ry22_llt(0.5 * (ry22 + ry22.transpose()));
  Eigen::MatrixXd schur_dual = ry11 - ry12 * ry22_llt.solve(ry12.transpose());
  if (!positive_definite(-schur_dual)) return std::nullopt;

  // Dual gains transpose into the observer gain and the innovation
  // feedthrough.
  Eigen::MatrixXd f_dual_y = y_sol.gain.bottomRows(p2);  // p2 x n
  Eigen::MatrixXd l_gain = -f_dual_y.transpose();        // n x p2
  Eigen::MatrixXd theta = -r22_eig.operatorInverseSqrt() *
                          ry12 * ry22_llt.solve(Eigen::MatrixXd::Identity(p2, p2));

  CentralController k;
  k.C = fu - theta * c2_bar;
  k.D = theta;
  k.A = a_bar - l_gain * c2_bar + p.B2 * k.C;
  k.B = l_gain + p.B2 * theta;
  if (!k.A.allFinite() || !k.B.allFinite() || !k.C.allFinite() || !k.D.allFinite()) {
    return std::nullopt;
  }
  return k;
}

bool closed_loop_stable(const StandardPlant& p, const CentralController& k) {
  const Eigen::Index n = p.states();
  const Eigen::Index nk = k.A.rows();
  // With D22 = 0 the interconnection is well posed unconditionally.
  Eigen::MatrixXd acl(n + nk, n + nk);
  acl.topLeftCorner(n, n) = p.A + p.B2 * k.D * p.C2;
  acl.topRightCorner(n, nk) = p.B2 * k.C;
  acl.bottomLeftCorner(nk, n) = k.B * p.C2;
  acl.bottomRightCorner(nk, nk) = k.A;
  Eigen::VectorXcd eigs = acl.eigenvalues();
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs(i)) >= 1.0 - 1e-9) return false;
  }
  return true;
}

}  // namespace

SynthesisResult hinf_synthesize(const GeneralizedPlant& plant,
                                const SynthesisOptions& options) {
  const StandardPlant std_plant = assemble(plant, options.reg_epsilon);

  // K = 0 keeps the (stable) plant as the closed loop, so its norm brackets
  // the achievable performance from above.
  const StateSpaceModel zero_filter = StateSpaceModel::gain(
      Eigen::MatrixXd::Zero(plant.segment_length, plant.retained_count),
      TimeDomain::kDiscrete, std_plant.period);
  const double open_loop_norm =
      hinf_norm(close_loop(plant, zero_filter), options.norm_rel_tol);

  SynthesisResult result{zero_filter, 0.0, 0.0, {}};

  auto probe = [&](double gamma) -> std::optional<CentralController> {
    auto k = probe_gamma(std_plant, gamma);
    if (k && !closed_loop_stable(std_plant, *k)) k.reset();
    result.iterations.push_back({gamma, k.has_value()});
    return k;
  };

  double hi = std::max(open_loop_norm, 1e-12);
  std::optional<CentralController> best = probe(hi);
  int doublings = 0;
  while (!best) {
    hi *= 2.0;
    if (++doublings > options.max_bracket_doublings) {
      throw InfeasibleAtUpperBound("no feasible gamma found while expanding the bracket");
    }
    best = probe(hi);
  }

  double lo = std::max(open_loop_norm / 100.0, 1e-9);
  if (lo >= hi) lo = hi / 2.0;
  // The nominal lower bound may itself be feasible (perfect-reconstruction
  // cases); push it down until it is a true lower bracket.
  while (lo > 1e-9) {
    auto k = probe(lo);
    if (!k) break;
    best = std::move(k);
    hi = lo;
    lo /= 10.0;
  }

  while (hi - lo > options.gamma_rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    auto k = probe(mid);
    if (k) {
      best = std::move(k);
      hi = mid;
    } else {
      lo = mid;
    }
  }

  result.filter = StateSpaceModel::discrete(best->A, best->B, best->C, best->D,
                                            std_plant.period);
  result.gamma = hi;
  result.J = hinf_norm(close_loop(plant, result.filter), options.norm_rel_tol);
  return result;
}

}  // namespace mrhinf
