#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inspath/instance.hpp"

namespace inspath {

// Open path as a permutation of node indices. Partial routes only appear
// inside constructive solvers.
using Route = std::vector<int>;

struct RouteViolation {
    enum class Kind { WrongLength, IndexOutOfRange, DuplicateNode, MissingEdge };

    Kind kind;
    int a = -1;
    int b = -1;

    std::string message() const;
};

// Reports the first violation in order: wrong length, out-of-range index,
// duplicate index, then (when require_edges) missing consecutive edge.
// Returns nullopt when the route is a valid full permutation.
std::optional<RouteViolation> validate_route(const Instance& instance, const Route& route,
                                             bool require_edges);

// Sum of the n-1 consecutive edge costs of a full open route; there is no
// closing edge. Throws InvalidRouteError / MissingEdgeError.
double evaluate_route(const Instance& instance, const Route& route);

}  // namespace inspath
