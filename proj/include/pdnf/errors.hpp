#pragma once

#include <stdexcept>
#include <string>

namespace pdnf {

/// Malformed external input (system files, reports, command-line values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold for the given
/// data (wrong lattice rank, non-realizable eigenvalues, all moduli one, ...).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing one of these means a bug in
/// this library, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pdnf
