#pragma once

#include <stdexcept>

namespace graphcake {

/// Base class for every engine error.  The CLI maps subclasses onto exit
/// codes: ParseError -> 4, AuditFailure -> 2, everything else -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: bad rational literal, invalid instance JSON, ...
struct ParseError : Error {
  using Error::Error;
};

/// An audited fairness, partition, or replay property does not hold.
struct AuditFailure : Error {
  using Error::Error;
};

/// A protocol invariant the engine is responsible for was violated.
struct ProtocolBug : Error {
  using Error::Error;
};

/// An iteration cap derived from the analytic bounds was exhausted.
struct CapExceeded : ProtocolBug {
  using ProtocolBug::ProtocolBug;
};

/// SubCore was invoked with benchmarks no envy-free assignment can meet.
struct BenchmarkInfeasible : ProtocolBug {
  using ProtocolBug::ProtocolBug;
};

/// A cut query asked for more value than the queried region holds.
struct InsufficientValue : Error {
  using Error::Error;
};

/// A rational denominator exceeded the configured bit budget.
struct RationalOverflow : Error {
  using Error::Error;
};

/// Union of overlapping pieces was requested.
struct OverlapError : Error {
  using Error::Error;
};

/// Agent id outside the oracle's (or graph's) range.
struct UnknownAgent : Error {
  using Error::Error;
};

/// Edge list contains a self-loop or an out-of-range endpoint.
struct InvalidEdge : Error {
  using Error::Error;
};

/// The social graph is not connected.
struct DisconnectedGraph : Error {
  using Error::Error;
};

/// A protocol step received an empty participant set.
struct EmptyParticipants : ProtocolBug {
  using ProtocolBug::ProtocolBug;
};

/// Exchange requested between agents that are not neighbors.
struct NotAdjacent : ProtocolBug {
  using ProtocolBug::ProtocolBug;
};

/// Exchange requested for agents outside the snapshot's participant set.
struct NotParticipants : ProtocolBug {
  using ProtocolBug::ProtocolBug;
};

/// Snapshot selection asked for more snapshots than the pool holds.
struct PoolTooSmall : ProtocolBug {
  using ProtocolBug::ProtocolBug;
};

}  // namespace graphcake
