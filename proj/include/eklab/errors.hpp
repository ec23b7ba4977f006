#pragma once

#include <stdexcept>
#include <string>

namespace eklab {

// Typed failures shared across the library. Downstream wedge/tensor
// arithmetic cannot absorb sentinel values, so degeneracies throw.

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// An element left the declared factor basis (composite cofactor above the
// trial-division bound over Q, or an irreducible cofactor of degree >= 3
// over Q(t)).
struct UnfactorableElement : std::runtime_error {
    explicit UnfactorableElement(const std::string& what) : std::runtime_error(what) {}
};

// The 1/2 in the C5 map failed to clear; signals a convention bug.
struct OddCoefficient : std::runtime_error {
    explicit OddCoefficient(const std::string& what) : std::runtime_error(what) {}
};

// The 1/15 in the C6 map failed to clear.
struct NonIntegralCoefficient : std::runtime_error {
    explicit NonIntegralCoefficient(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eklab
