#pragma once

#include <vector>

#include "inspath/instance.hpp"
#include "inspath/route.hpp"

namespace inspath {

// via[i][j] = predecessor of j on the chosen shortest path from i to j,
// or -1 when i == j. Enough to reconstruct a realizing waypoint sequence
// for every pair.
struct ViaTable {
    int n = 0;
    std::vector<int> entries;  // n * n, row-major

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
};

struct MetricCompletion {
    Instance completed;
    ViaTable via;
};

// All-pairs shortest paths over the present edges. Present edges keep their
// cost exactly whenever no strictly cheaper via-path exists; relaxation is
// repeated to a fixpoint so completing an already-completed instance is an
// exact no-op. Throws DisconnectedError listing components.
MetricCompletion metric_completion(const Instance& instance);

// Open route over a metric-completed instance realized as waypoints over
// original edges; repeats allowed.
struct ExpandedRoute {
    std::vector<int> waypoints;
    double cost = 0.0;
};

// Replaces every route leg by the waypoint sequence recorded in `via`,
// summing original edge costs. Throws InconsistentViaError if a
// reconstruction fails to terminate within n steps.
ExpandedRoute expand_route(const Route& route, const ViaTable& via, const Instance& original);

// Reduction of the open-path problem to a closed-tour one: appends a dummy
// node with zero-cost edges to every other node. Requires a complete matrix.
Instance close_with_dummy(const Instance& instance);

// Inverse of the reduction: rotates the closed tour so the dummy (node n,
// the highest index) comes first, then drops it.
Route strip_dummy(const Route& tour);

}  // namespace inspath
