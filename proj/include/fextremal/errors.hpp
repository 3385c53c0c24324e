#pragma once

#include <stdexcept>
#include <string>

namespace fextremal {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generic precondition violation (bad n, bad delta, value out of range).
struct DomainError : Error {
  using Error::Error;
};

// Tree validation.
struct NotConnected : Error {
  using Error::Error;
};
struct HasCycle : Error {
  using Error::Error;
};
struct WrongEdgeCount : Error {
  using Error::Error;
};
struct SelfLoop : Error {
  using Error::Error;
};
struct DuplicateEdge : Error {
  using Error::Error;
};

// Degree spec expansion whose total does not match the requested n.
struct InconsistentTotal : Error {
  using Error::Error;
};

// alpha in {0, 1} is excluded for the general first Zagreb index.
struct InvalidAlpha : Error {
  using Error::Error;
};

// Integer program has no feasible point (malformed instance).
struct Infeasible : Error {
  using Error::Error;
};

// Degree multiset is not realizable as a tree.
struct NotRealizable : Error {
  using Error::Error;
};

// Edge shift legality.
struct EdgeMissing : Error {
  using Error::Error;
};
struct EdgePresent : Error {
  using Error::Error;
};
struct WouldDisconnect : Error {
  using Error::Error;
};

// A vertex degree exceeds the stated bound.
struct DegreeBoundViolated : Error {
  using Error::Error;
};

// File and format handling.
struct ParseError : Error {
  using Error::Error;
};
struct WriteError : Error {
  using Error::Error;
};

// Closed form, integer program and enumeration disagree (guards regressions).
struct RouteMismatch : Error {
  using Error::Error;
};

}  // namespace fextremal
