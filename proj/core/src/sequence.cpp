// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/sequence.hpp"

#include <algorithm>

#include "mrhinf/errors.hpp"

namespace mrhinf {

namespace {

// Number of retained slots among absolute positions 0 .. t-1.
std::size_t retained_before(const DecimationPattern& p, std::size_t t) {
  const auto m = static_cast<std::size_t>(p.segment_length());
  std::size_t count = static_cast<std::size_t>(p.retained_count()) * (t / m);
  const std::size_t phase = t % m;
  for (int idx : p.ones_indices()) {
    if (static_cast<std::size_t>(idx) < phase) ++count;
  }
  return count;
}

}  // namespace

SignalSequence decimate(const SignalSequence& x, const DecimationPattern& p) {
  SignalSequence out;
  out.start_index = retained_before(p, x.start_index);
  out.samples.reserve(x.samples.size());
  for (std::size_t k = 0; k < x.samples.size(); ++k) {
    const long long t = static_cast<long long>(x.start_index + k);
    if (p.bit_at(t) == 1) out.samples.push_back(x.samples[k]);
  }
  return out;
}

SignalSequence expand(const SignalSequence& y, const DecimationPattern& p) {
  const auto m = static_cast<std::size_t>(p.segment_length());
  const auto n = static_cast<std::size_t>(p.retained_count());
  const auto& ones = p.ones_indices();

  // Absolute fast-grid position of retained sample j.
  auto position = [&](std::size_t j) {
    return m * (j / n) + static_cast<std::size_t>(ones[j % n]);
  };

  SignalSequence out;
  const std::size_t start = y.start_index;
  // A group-aligned start covers its segment from the boundary; mid-group
  // starts only cover from the first known slot.
  out.start_index = (start % n == 0) ? m * (start / n) : position(start);
  if (y.samples.empty()) return out;

  const std::size_t jlast = start + y.samples.size() - 1;
  // Complete trailing group: the whole segment. Partial group: only up to
  // the last covered slot.
  const std::size_t end =
      ((jlast + 1) % n == 0) ? m * (jlast / n + 1) : position(jlast) + 1;
  out.samples.assign(end - out.start_index, 0.0);
  for (std::size_t k = 0; k < y.samples.size(); ++k) {
    out.samples[position(start + k) - out.start_index] = y.samples[k];
  }
  return out;
}

Eigen::MatrixXd selection_matrix(const DecimationPattern& p) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(p.retained_count(), p.segment_length());
  const auto& ones = p.ones_indices();
  for (int k = 0; k < p.retained_count(); ++k) e(k, ones[k]) = 1.0;
  return e;
}

std::vector<Eigen::VectorXd> block(const SignalSequence& x, int m) {
  if (m < 1) throw InvalidCounts("block size must be positive");
  if (x.samples.size() % static_cast<std::size_t>(m) != 0) {
    throw LengthNotDivisible("sequence length is not a multiple of the block size");
  }
  std::vector<Eigen::VectorXd> out;
  out.reserve(x.samples.size() / m);
  for (std::size_t k = 0; k < x.samples.size(); k += m) {
    Eigen::VectorXd v(m);
    for (int j = 0; j < m; ++j) v(j) = x.samples[k + j];
    out.push_back(std::move(v));
  }
  return out;
}

SignalSequence unblock(const std::vector<Eigen::VectorXd>& v) {
  SignalSequence out;
  for (const auto& blk : v) {
    for (Eigen::Index j = 0; j < blk.size(); ++j) out.samples.push_back(blk(j));
  }
  return out;
}

}  // namespace mrhinf
