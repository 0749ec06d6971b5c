#pragma once

#include <stdexcept>
#include <string>

namespace scottq {

// Malformed input text: bad token, duplicate/unknown element, missing header.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Declared order violates antisymmetry after closure, i.e. contains a cycle.
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was asked for on an argument outside its contract
// (non-T0 space, set that is not closed, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size/iteration cap was exceeded. Deliberate refusal, not a bug.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A symbolic witness misbehaved (e.g. its escape element is covered).
// Indicates the catalog itself is wrong; always fatal for the caller.
struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace scottq
