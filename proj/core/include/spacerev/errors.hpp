#pragma once

#include <stdexcept>
#include <string>

namespace spacerev {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (graph, clause or scenario files).
class ParseError : public Error {
  using Error::Error;
};

/// Semantically invalid clause or knowledge-base content (tautology, empty
/// clause, duplicate id, literal anchored at an unknown parcel, ...).
class IngestError : public Error {
  using Error::Error;
};

class UnknownVertexError : public Error {
  using Error::Error;
};

/// Raised by partition() when kprime <= k.
class InvalidRadiiError : public Error {
  using Error::Error;
};

class BadIndexError : public Error {
  using Error::Error;
};

/// A conflict footprint spans disconnected components, so no k-neighborhood
/// contains it and its spatial size is undefined.
class DisconnectedFootprintError : public Error {
  using Error::Error;
};

/// Conflict enumeration hit a configured bound (max cardinality or max
/// candidate count) while larger conflicts may still exist. Callers must
/// surface this; results are never silently truncated.
class BudgetExceededError : public Error {
  using Error::Error;
};

class IndependenceViolatedError : public Error {
  using Error::Error;
};

class EmptyCandidatesError : public Error {
  using Error::Error;
};

/// Some conflict consists of protected (S2) clauses only, so no revision of
/// the belief set S1 can restore consistency.
class UnrepairableConflictError : public Error {
  using Error::Error;
};

class InvalidScenarioError : public Error {
  using Error::Error;
};

class InvalidParamsError : public Error {
  using Error::Error;
};

}  // namespace spacerev
