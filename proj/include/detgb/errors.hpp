#pragma once

#include <stdexcept>
#include <string>

namespace detgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different numbers of variables or shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Module monomials with incomparable basis kinds were compared.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text or instance file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (degree, shape, range).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant did not hold. Indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

#define DETGB_CHECK(cond, msg)                                              \
  do {                                                                      \
    if (!(cond)) throw ::detgb::InvariantError(std::string(__FILE__) + ":" + \
                                               std::to_string(__LINE__) +   \
                                               ": " + (msg));               \
  } while (false)

}  // namespace detgb
