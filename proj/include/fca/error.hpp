#pragma once

#include <stdexcept>
#include <string>

namespace fca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index or size mismatch between a set/table and the structure it is used with.
struct DimensionError : Error {
  using Error::Error;
};

/// A set was used with a context other than the one that owns it.
struct OwnershipError : Error {
  using Error::Error;
};

/// An order matrix failed the order/lattice axioms at construction.
struct OrderError : Error {
  using Error::Error;
};

/// An operation's class precondition failed (e.g. a map that must be a
/// complete homomorphism, a pair that must be separately continuous).
struct ClassError : Error {
  using Error::Error;
};

/// An operation defined only for purified contexts got a non-purified one.
struct PurityError : Error {
  using Error::Error;
};

/// A structural claim that must hold by construction was violated; this is a
/// bug or a falsified invariant and is surfaced, never swallowed.
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line(line), column(column) {}
  std::size_t line, column;
};

}  // namespace fca
