#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmorbit {

/// Base of every error raised by the library. Each concrete class maps to one
/// CLI exit code (see tools/kmorbit.cpp).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed Laurent literal. `position()` is the 0-based byte offset.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A zero test or coefficient lookup fell beyond the tracked precision bound.
class PrecisionExhausted : public Error {
public:
  using Error::Error;
};

class ZeroHasNoOrder : public Error {
public:
  ZeroHasNoOrder() : Error("the zero series has no order") {}
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class NoRoot : public Error {
public:
  using Error::Error;
};

/// Leading coefficient has no n-th root inside Q(i).
class RootNotRepresentable : public Error {
public:
  using Error::Error;
};

class ZeroScale : public Error {
public:
  ZeroScale() : Error("t -> z t substitution needs z != 0") {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class Singular : public Error {
public:
  Singular() : Error("matrix is singular") {}
};

class NotNilpotent : public Error {
public:
  using Error::Error;
};

class InvalidPartition : public Error {
public:
  using Error::Error;
};

class InvalidShift : public Error {
public:
  using Error::Error;
};

class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class NotConjugate : public Error {
public:
  using Error::Error;
};

/// Derivation component together with a group element known only up to a
/// scalar factor.
class CertifiedDetWithDerivation : public Error {
public:
  CertifiedDetWithDerivation()
      : Error("group element has a certified (non-unit) determinant; it cannot act on an element "
              "with a derivation component") {}
};

/// Structurally invalid element/group data: wrong shape, nonzero trace, bad
/// determinant, malformed document.
class InvalidInput : public Error {
public:
  using Error::Error;
};

} // namespace kmorbit
