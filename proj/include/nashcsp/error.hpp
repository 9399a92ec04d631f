#pragma once

#include <stdexcept>
#include <string>

namespace nashcsp {

/// Base of every error raised by the library. Each subclass maps onto one
/// process exit code of the command-line tool.
class Error : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
   virtual int exit_code() const noexcept { return 2; }
};

/// Malformed input, schema violations and broken game invariants.
class InputError : public Error {
public:
   using Error::Error;
};

class ValidationError : public InputError {
public:
   using InputError::InputError;
};

/// A decomposition that fails its validator.
class DecompositionError : public InputError {
public:
   using InputError::InputError;
};

/// The requested method does not apply to this instance (e.g. a join tree
/// was requested for a cyclic hypergraph).
class InapplicableError : public Error {
public:
   using Error::Error;
   int exit_code() const noexcept override { return 3; }
};

/// An enumeration would exceed the configured size guard.
class GuardExceeded : public Error {
public:
   using Error::Error;
   int exit_code() const noexcept override { return 4; }
};

}  // namespace nashcsp
