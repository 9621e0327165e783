#include "inspath/route.hpp"

namespace inspath {

std::string RouteViolation::message() const {
    switch (kind) {
        case Kind::WrongLength:
            return "route length " + std::to_string(a) + " does not match node count " +
                   std::to_string(b);
        case Kind::IndexOutOfRange:
            return "node index " + std::to_string(a) + " out of range";
        case Kind::DuplicateNode:
            return "node " + std::to_string(a) + " visited more than once";
        case Kind::MissingEdge:
            return "no edge between consecutive nodes " + std::to_string(a) + " and " +
                   std::to_string(b);
    }
    return "unknown violation";
}

std::optional<RouteViolation> validate_route(const Instance& instance, const Route& route,
                                             bool require_edges) {
    const int n = instance.n();
    if (static_cast<int>(route.size()) != n)
        return RouteViolation{RouteViolation::Kind::WrongLength, static_cast<int>(route.size()), n};
    for (int node : route)
        if (node < 0 || node >= n)
            return RouteViolation{RouteViolation::Kind::IndexOutOfRange, node, -1};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int node : route) {
        if (seen[node]) return RouteViolation{RouteViolation::Kind::DuplicateNode, node, -1};
        seen[node] = 1;
    }
    if (require_edges) {
        for (std::size_t k = 0; k + 1 < route.size(); ++k)
            if (!instance.costs.has(route[k], route[k + 1]))
                return RouteViolation{RouteViolation::Kind::MissingEdge, route[k], route[k + 1]};
    }
    return std::nullopt;
}

double evaluate_route(const Instance& instance, const Route& route) {
    if (auto violation = validate_route(instance, route, false)) {
        if (violation->kind == RouteViolation::Kind::MissingEdge)
            throw MissingEdgeError(violation->a, violation->b);
        throw InvalidRouteError(violation->message());
    }
    double cost = 0.0;
    for (std::size_t k = 0; k + 1 < route.size(); ++k)
        cost += instance.costs.at(route[k], route[k + 1]);
    return cost;
}

}  // namespace inspath
