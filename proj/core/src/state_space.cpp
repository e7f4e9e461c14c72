// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/state_space.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <utility>

#include "mrhinf/errors.hpp"

namespace mrhinf {

namespace {

bool periods_match(const StateSpaceModel& g, const StateSpaceModel& h) {
  if (g.domain() != h.domain()) return false;
  if (g.is_continuous()) return true;
  const double scale = std::max(g.period(), h.period());
  return std::abs(g.period() - h.period()) <= 1e-12 * scale;
}

}  // namespace

StateSpaceModel::StateSpaceModel(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd C,
                                 Eigen::MatrixXd D, TimeDomain domain, double period)
    : a_(std::move(A)), b_(std::move(B)), c_(std::move(C)), d_(std::move(D)),
      domain_(domain), period_(period) {
  const Eigen::Index n = a_.rows();
  if (a_.cols() != n) throw DimensionMismatch("A must be square");
  if (b_.rows() != n) throw DimensionMismatch("B row count must match the state count");
  if (c_.cols() != n) throw DimensionMismatch("C column count must match the state count");
  if (d_.rows() != c_.rows() || d_.cols() != b_.cols()) {
    throw DimensionMismatch("D must be (outputs x inputs)");
  }
  if (domain_ == TimeDomain::kDiscrete && period_ <= 0.0) {
    throw InvalidPeriod("discrete models need a positive sampling period");
  }
}

StateSpaceModel StateSpaceModel::continuous(Eigen::MatrixXd A, Eigen::MatrixXd B,
                                            Eigen::MatrixXd C, Eigen::MatrixXd D) {
  return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                         TimeDomain::kContinuous);
}

StateSpaceModel StateSpaceModel::discrete(Eigen::MatrixXd A, Eigen::MatrixXd B,
                                          Eigen::MatrixXd C, Eigen::MatrixXd D,
                                          double period) {
  return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                         TimeDomain::kDiscrete, period);
}

StateSpaceModel StateSpaceModel::gain(const Eigen::MatrixXd& D, TimeDomain domain,
                                      double period) {
  const Eigen::Index p = D.rows();
  const Eigen::Index q = D.cols();
  return StateSpaceModel(Eigen::MatrixXd::Zero(0, 0), Eigen::MatrixXd::Zero(0, q),
                         Eigen::MatrixXd::Zero(p, 0), D, domain, period);
}

Eigen::VectorXcd StateSpaceModel::poles() const {
  if (state_count() == 0) return Eigen::VectorXcd(0);
  return a_.eigenvalues();
}

bool StateSpaceModel::is_stable(double margin) const {
  const Eigen::VectorXcd p = poles();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (is_discrete()) {
      if (std::abs(p(i)) >= 1.0 - margin) return false;
    } else {
      if (p(i).real() >= -margin) return false;
    }
  }
  return true;
}

StateSpaceModel series(const StateSpaceModel& g, const StateSpaceModel& h) {
  if (!periods_match(g, h)) throw DomainMismatch("series requires matching time domains");
  if (g.input_count() != h.output_count()) {
    throw DimensionMismatch("series: inner dimensions do not agree");
  }
  const Eigen::Index nh = h.state_count();
  const Eigen::Index ng = g.state_count();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nh + ng, nh + ng);
  A.topLeftCorner(nh, nh) = h.A();
  A.bottomLeftCorner(ng, nh) = g.B() * h.C();
  A.bottomRightCorner(ng, ng) = g.A();
  Eigen::MatrixXd B(nh + ng, h.input_count());
  B.topRows(nh) = h.B();
  B.bottomRows(ng) = g.B() * h.D();
  Eigen::MatrixXd C(g.output_count(), nh + ng);
  C.leftCols(nh) = g.D() * h.C();
  C.rightCols(ng) = g.C();
  Eigen::MatrixXd D = g.D() * h.D();
  return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                         g.domain(), g.period());
}

StateSpaceModel add(const StateSpaceModel& g, const StateSpaceModel& h) {
  if (!periods_match(g, h)) throw DomainMismatch("add requires matching time domains");
  if (g.input_count() != h.input_count() || g.output_count() != h.output_count()) {
    throw DimensionMismatch("add: systems must share I/O dimensions");
  }
  const Eigen::Index ng = g.state_count();
  const Eigen::Index nh = h.state_count();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(ng + nh, ng + nh);
  A.topLeftCorner(ng, ng) = g.A();
  A.bottomRightCorner(nh, nh) = h.A();
  Eigen::MatrixXd B(ng + nh, g.input_count());
  B.topRows(ng) = g.B();
  B.bottomRows(nh) = h.B();
  Eigen::MatrixXd C(g.output_count(), ng + nh);
  C.leftCols(ng) = g.C();
  C.rightCols(nh) = h.C();
  Eigen::MatrixXd D = g.D() + h.D();
  return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                         g.domain(), g.period());
}

StateSpaceModel delay(int k, double period) {
  if (k < 0) throw InvalidCounts("delay length must be non-negative");
  if (k == 0) {
    return StateSpaceModel::gain(Eigen::MatrixXd::Identity(1, 1), TimeDomain::kDiscrete,
                                 period);
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
  for (int i = 1; i < k; ++i) A(i, i - 1) = 1.0;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(k, 1);
  B(0, 0) = 1.0;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, k);
  C(0, k - 1) = 1.0;
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(1, 1);
  return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                         TimeDomain::kDiscrete, period);
}

StateSpaceModel premultiply(const Eigen::MatrixXd& gain, const StateSpaceModel& g) {
  if (gain.cols() != g.output_count()) {
    throw DimensionMismatch("premultiply: gain columns must match system outputs");
  }
  return StateSpaceModel(g.A(), g.B(), gain * g.C(), gain * g.D(), g.domain(), g.period());
}

StateSpaceModel postmultiply(const StateSpaceModel& g, const Eigen::MatrixXd& gain) {
  if (gain.rows() != g.input_count()) {
    throw DimensionMismatch("postmultiply: gain rows must match system inputs");
  }
  return StateSpaceModel(g.A(), g.B() * gain, g.C(), g.D() * gain, g.domain(), g.period());
}

StateSpaceModel scale(const StateSpaceModel& g, double factor) {
  return StateSpaceModel(g.A(), g.B(), factor * g.C(), factor * g.D(), g.domain(),
                         g.period());
}

std::vector<Eigen::VectorXd> simulate(const StateSpaceModel& g,
                                      const std::vector<Eigen::VectorXd>& inputs) {
  if (!g.is_discrete()) throw NonDiscreteInput("simulate requires a discrete model");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(g.state_count());
  std::vector<Eigen::VectorXd> out;
  out.reserve(inputs.size());
  for (const auto& u : inputs) {
    if (u.size() != g.input_count()) throw DimensionMismatch("simulate: bad input size");
    out.push_back(g.C() * x + g.D() * u);
    x = g.A() * x + g.B() * u;
  }
  return out;
}

std::vector<double> simulate(const StateSpaceModel& g, const std::vector<double>& inputs) {
  if (g.input_count() != 1 || g.output_count() != 1) {
    throw DimensionMismatch("scalar simulate requires a SISO model");
  }
  std::vector<Eigen::VectorXd> u;
  u.reserve(inputs.size());
  for (double v : inputs) u.push_back(Eigen::VectorXd::Constant(1, v));
  std::vector<double> out;
  out.reserve(inputs.size());
  for (const auto& y : simulate(g, u)) out.push_back(y(0));
  return out;
}

}  // namespace mrhinf
