// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mrhinf {

/// A periodic binary decimation pattern of length M with N retained slots.
///
/// Bit value 1 marks a sample that survives decimation, 0 a discarded one.
/// The pattern is immutable; the retained indices, counts, and ratio are
/// derived once at construction.
class DecimationPattern {
 public:
  /// Builds a pattern from an explicit bit list. Entries must be 0 or 1 and
  /// at least one bit must be set.
  static DecimationPattern from_bits(const std::vector<int>& bits);

  /// Parses a pattern literal such as "1100".
  static DecimationPattern from_string(std::string_view text);

  /// Block decimation: keep the first r1 samples out of every r2.
  static DecimationPattern block(int r1, int r2);

  int segment_length() const { return static_cast<int>(bits_.size()); }  // M
  int retained_count() const { return static_cast<int>(ones_.size()); }  // N
  const std::vector<int>& bits() const { return bits_; }
  const std::vector<int>& ones_indices() const { return ones_; }
  double decimation_ratio() const {
    return static_cast<double>(segment_length()) / retained_count();
  }

  /// Cyclic bit lookup, b_{k mod M} for any non-negative sample index k.
  int bit_at(long long k) const {
    return bits_[static_cast<std::size_t>(k % segment_length())];
  }

  /// Left rotation by `steps`: result bit k equals this bit (k + steps) mod M.
  DecimationPattern rotated(int steps) const;

  /// The lexicographically smallest rotation; two patterns are
  /// cyclic-equivalent iff their canonical rotations compare equal.
  DecimationPattern canonical_rotation() const;

  /// All distinct rotations of this pattern, in first-occurrence order
  /// starting from the pattern itself.
  std::vector<DecimationPattern> rotations() const;

  /// Longest run of zeros when the pattern is read cyclically.
  int max_cyclic_zero_run() const;

  std::string to_string() const;

  friend bool operator==(const DecimationPattern& a, const DecimationPattern& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator<(const DecimationPattern& a, const DecimationPattern& b) {
    return a.bits_ < b.bits_;
  }

 private:
  explicit DecimationPattern(std::vector<int> bits);

  std::vector<int> bits_;
  std::vector<int> ones_;
};

}  // namespace mrhinf
