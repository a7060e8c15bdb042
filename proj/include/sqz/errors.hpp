#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

// Error taxonomy shared by the whole library. The CLI maps these classes
// onto its exit-code contract, so new failure modes should reuse one of
// them instead of throwing raw std exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was broken by the caller (dimension mismatch,
// point outside its domain, empty point set, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Input data is structurally invalid (bad JSON shape, matrix that fails the
// symmetry tolerance, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for this domain kind.
class UnsupportedDomain : public Error {
 public:
  using Error::Error;
};

// The map lacks a capability the operation needs (usually an inverse).
class UnsupportedMap : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside its legal range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An intersection of bound intervals came out empty. The built-in rules are
// mutually consistent, so this signals an implementation bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqz
