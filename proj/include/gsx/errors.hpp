#pragma once

#include <stdexcept>
#include <string>

namespace gsx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad argument (unknown vertex, malformed request, ...).
struct DomainError : Error {
    using Error::Error;
};

/// No route through free cells exists.
struct NoPathError : Error {
    using Error::Error;
};

/// A gadget footprint is blocked.
struct SpaceError : Error {
    using Error::Error;
};

/// merge_subgraphs precondition violated.
struct MergePreconditionError : Error {
    using Error::Error;
};

/// Requested measurement outcome has probability zero.
struct ImpossibleOutcomeError : Error {
    using Error::Error;
};

/// Problem instance exceeds a configured resource cap.
struct ResourceError : Error {
    using Error::Error;
};

/// A planner could not satisfy the request.
struct PlanningError : Error {
    using Error::Error;
};

/// Executed plan disagrees with its prediction; a planner bug.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace gsx
