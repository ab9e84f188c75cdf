#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayb {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed generator expression or cycle notation; offset is the byte
// position of the offending token in the input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// Generating set contains the identity.
class InvalidSetError : public Error {
 public:
  using Error::Error;
};

// Generating set is not closed under inverses.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

// S does not generate the whole group (strict mode only).
class NotGeneratingError : public Error {
 public:
  NotGeneratingError(const std::string& msg, int subgroup_order)
      : Error(msg), subgroup_order(subgroup_order) {}
  int subgroup_order;
};

// Permutation closure exceeded the configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Table-backed group fails validation (identity, inverses, Latin square).
class MalformedGroupError : public Error {
 public:
  using Error::Error;
};

// w_set_sizes called with x == y.
class DegeneratePairError : public Error {
 public:
  using Error::Error;
};

// A pair at infinite distance was encountered (disconnected graph).
class UnreachablePairError : public Error {
 public:
  using Error::Error;
};

// ell outside [1, diameter].
class RangeError : public Error {
 public:
  using Error::Error;
};

// Invalid sweep / family parameter (gcd condition, odd n for HALF, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Claims A/B requested for s in {r, r-1, r+1}; those are handled by the
// dedicated case checks instead.
class OutOfCaseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayb
