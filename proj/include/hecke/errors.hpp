#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base of every error raised by the library. Precondition violations on
// plain arguments (zero level, non-coprime moduli, ...) use
// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// (c, d) does not generate a free rank-one submodule of (Z/NZ)^2.
class NotAPoint : public Error {
public:
  using Error::Error;
};

// A lattice label whose projective determinant differs from the level.
class WrongHyperdistance : public Error {
public:
  using Error::Error;
};

// Level outside {1,2,3,4,5,6,7,8,9,10,12,13,16,18,25}.
class NotGenusZero : public Error {
public:
  using Error::Error;
};

// Two computations that must agree did not; always a bug.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

} // namespace hecke
