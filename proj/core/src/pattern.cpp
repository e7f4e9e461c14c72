// SPDX-License-Identifier: Apache-2.0

#include "mrhinf/pattern.hpp"

#include <algorithm>

#include "mrhinf/errors.hpp"

namespace mrhinf {

DecimationPattern::DecimationPattern(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int i = 0; i < static_cast<int>(bits_.size()); ++i) {
    if (bits_[i] == 1) ones_.push_back(i);
  }
}

DecimationPattern DecimationPattern::from_bits(const std::vector<int>& bits) {
  if (bits.empty()) throw InvalidSymbol("pattern must contain at least one bit");
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidSymbol("pattern bits must be 0 or 1");
  }
  if (std::find(bits.begin(), bits.end(), 1) == bits.end()) {
    throw AllZeroPattern("pattern retains no samples");
  }
  return DecimationPattern(bits);
}

DecimationPattern DecimationPattern::from_string(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw InvalidSymbol(std::string("invalid pattern character '") + c + "'");
    }
  }
  return from_bits(bits);
}

DecimationPattern DecimationPattern::block(int r1, int r2) {
  if (r1 < 1 || r1 > r2) throw InvalidBlockSpec("block pattern requires 1 <= r1 <= r2");
  std::vector<int> bits(static_cast<std::size_t>(r2), 0);
  std::fill(bits.begin(), bits.begin() + r1, 1);
  return DecimationPattern(std::move(bits));
}

DecimationPattern DecimationPattern::rotated(int steps) const {
  const int m = segment_length();
  const int s = ((steps % m) + m) % m;
  std::vector<int> bits(bits_.size());
  for (int k = 0; k < m; ++k) bits[k] = bits_[(k + s) % m];
  return DecimationPattern(std::move(bits));
}

DecimationPattern DecimationPattern::canonical_rotation() const {
  DecimationPattern best = *this;
  for (int s = 1; s < segment_length(); ++s) {
    DecimationPattern candidate = rotated(s);
    if (candidate < best) best = candidate;
  }
  return best;
}

std::vector<DecimationPattern> DecimationPattern::rotations() const {
  std::vector<DecimationPattern> out;
  for (int s = 0; s < segment_length(); ++s) {
    DecimationPattern candidate = rotated(s);
    if (std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

int DecimationPattern::max_cyclic_zero_run() const {
  const int m = segment_length();
  // Scanning two periods captures any run that wraps around the boundary.
  int best = 0;
  int run = 0;
  for (int k = 0; k < 2 * m; ++k) {
    if (bits_[k % m] == 0) {
      run += 1;
      best = std::max(best, std::min(run, m));
    } else {
      run = 0;
    }
  }
  return best;
}

std::string DecimationPattern::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (int b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace mrhinf
