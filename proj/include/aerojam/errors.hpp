#pragma once

#include <stdexcept>

namespace aerojam {

// Geometry that has collapsed: coincident points, a drone sitting on the
// ground line, a zero axis.
struct DegenerateGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Anything wrong with a scenario document: unreadable, malformed, or
// carrying invalid values.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : ScenarioError {
    using ScenarioError::ScenarioError;
};

struct ValidationError : ScenarioError {
    using ScenarioError::ScenarioError;
};

}  // namespace aerojam
