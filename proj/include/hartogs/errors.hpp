#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

/// Invalid or out-of-range domain parameters.
struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point dimension does not match the map or domain it is used with.
struct RankMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An element violates a structural constraint (e.g. a projection applied to
/// an element with nonzero complementary slots).
struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A potential was evaluated where its log argument is nonpositive.
struct EvaluationOutsideDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point that must lie inside a domain does not.
struct OutsideDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Metric factorization pivot underflow.
struct SingularMetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tangent plane with (numerically) dependent spanning vectors.
struct DegeneratePlane : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameter for an automorphism lift (e.g. |a| >= 1).
struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent scenario configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A trajectory left the domain at time t.
struct ExitedDomain : std::runtime_error {
    double t;
    explicit ExitedDomain(double when)
        : std::runtime_error("trajectory exited the domain at t=" + std::to_string(when)), t(when) {}
};

} // namespace hartogs
