#pragma once

#include <stdexcept>
#include <string>

namespace fistab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings, or an operation needs a
/// specific ring (e.g. Smith normal form over the integers).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// d_out * d_in != 0, or a constructed differential failed d^2 = 0.
class NotAComplex : public Error {
 public:
  using Error::Error;
};

/// A level beyond the stored truncation was requested.
class TruncationExceeded : public Error {
 public:
  using Error::Error;
};

/// A levelwise integral cokernel has torsion and cannot be stored as a
/// free-valued FI-module.
class TorsionInCokernel : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fistab
