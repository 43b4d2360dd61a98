#pragma once

#include <stdexcept>
#include <string>

namespace linea {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Misuse of field arithmetic: descriptor mismatch, division by zero,
// operations gated to characteristic 0.
struct FieldError : Error {
  using Error::Error;
};

// Degenerate geometric input: meet of identical lines, join of identical
// points, duplicate lines in an arrangement.
struct GeometryError : Error {
  using Error::Error;
};

// Bad user input: malformed files, schema violations, out-of-range
// parameters. The CLI maps this to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// A consistency law the library guarantees was found violated; always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace linea
