#pragma once

#include <stdexcept>
#include <string>

namespace knotcalc {

// Malformed text input (braid tokens, polynomial text, R-matrix files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (bad position, wrong letter
// kind, non-knot closure, dimension cap, ...).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed (corrupted builtin data, inexact
// division where exactness is guaranteed, ...).
struct InternalCheckError : std::runtime_error {
  explicit InternalCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotcalc
