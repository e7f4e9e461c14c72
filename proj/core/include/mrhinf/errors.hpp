// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mrhinf {

/// Base class for all mrhinf errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AllZeroPattern : public Error {
 public:
  using Error::Error;
};

class InvalidSymbol : public Error {
 public:
  using Error::Error;
};

class InvalidBlockSpec : public Error {
 public:
  using Error::Error;
};

class InvalidCounts : public Error {
 public:
  using Error::Error;
};

class InvalidPeriod : public Error {
 public:
  using Error::Error;
};

class LengthNotDivisible : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class NonContinuousInput : public Error {
 public:
  using Error::Error;
};

class NonDiscreteInput : public Error {
 public:
  using Error::Error;
};

class UnstableSystem : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class RiccatiFailure : public Error {
 public:
  using Error::Error;
};

class InfeasibleAtUpperBound : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace mrhinf
