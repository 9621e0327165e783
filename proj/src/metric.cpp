#include "inspath/metric.hpp"

#include <algorithm>
#include <limits>

namespace inspath {

namespace {

std::vector<std::vector<int>> connected_components(const Instance& instance) {
    const int n = instance.n();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (label[root] != -1) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        stack.push_back(root);
        label[root] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            components[id].push_back(v);
            for (int u = 0; u < n; ++u) {
                if (u != v && label[u] == -1 && instance.costs.has(v, u)) {
                    label[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    return components;
}

}  // namespace

MetricCompletion metric_completion(const Instance& instance) {
    const int n = instance.n();

    auto components = connected_components(instance);
    if (components.size() > 1) throw DisconnectedError(std::move(components));

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n) * n, kInf);
    ViaTable via{n, std::vector<int>(static_cast<std::size_t>(n) * n, -1)};
    auto d = [&](int i, int j) -> double& { return dist[static_cast<std::size_t>(i) * n + j]; };

    for (int i = 0; i < n; ++i) {
        d(i, i) = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i != j && instance.costs.has(i, j)) {
                d(i, j) = instance.costs.at(i, j);
                via.at(i, j) = i;
            }
        }
    }

    // Floyd-Warshall, repeated until no entry changes. Updates happen only on
    // strict improvement, so ties keep the direct edge (or the path through
    // the lowest intermediate found first) and a second completion changes
    // nothing -- the extra passes absorb the rare rounding-order cases where
    // one sweep leaves an entry an ulp above a two-hop sum.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                const double dik = d(i, k);
                if (dik == kInf) continue;
                for (int j = 0; j < n; ++j) {
                    const double candidate = dik + d(k, j);
                    if (candidate < d(i, j)) {
                        d(i, j) = candidate;
                        via.at(i, j) = via.at(k, j);
                        changed = true;
                    }
                }
            }
        }
    }

    Instance completed = instance;
    completed.costs = CostMatrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) completed.costs.set(i, j, d(i, j));
    return {std::move(completed), std::move(via)};
}

ExpandedRoute expand_route(const Route& route, const ViaTable& via, const Instance& original) {
    ExpandedRoute expanded;
    if (route.empty()) return expanded;

    expanded.waypoints.push_back(route.front());
    for (std::size_t leg = 0; leg + 1 < route.size(); ++leg) {
        const int from = route[leg];
        const int to = route[leg + 1];
        // Walk the predecessor chain back from `to`, then append in order.
        std::vector<int> segment;
        int cursor = to;
        while (cursor != from) {
            segment.push_back(cursor);
            cursor = via.at(from, cursor);
            if (cursor < 0 || static_cast<int>(segment.size()) > via.n)
                throw InconsistentViaError(from, to);
        }
        for (auto it = segment.rbegin(); it != segment.rend(); ++it)
            expanded.waypoints.push_back(*it);
    }

    double cost = 0.0;
    for (std::size_t k = 0; k + 1 < expanded.waypoints.size(); ++k)
        cost += original.costs.at(expanded.waypoints[k], expanded.waypoints[k + 1]);
    expanded.cost = cost;
    return expanded;
}

Instance close_with_dummy(const Instance& instance) {
    instance.costs.require_complete();
    const int n = instance.n();

    Instance augmented = instance;
    augmented.points.push_back(Point3{0.0, 0.0, 0.0});
    augmented.costs = CostMatrix(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) augmented.costs.set(i, j, instance.costs.at(i, j));
    for (int i = 0; i < n; ++i) augmented.costs.set(i, n, 0.0);
    return augmented;
}

Route strip_dummy(const Route& tour) {
    if (tour.empty()) throw DummyMissingError(-1);
    const int dummy = static_cast<int>(tour.size()) - 1;
    const auto pos = std::find(tour.begin(), tour.end(), dummy);
    if (pos == tour.end()) throw DummyMissingError(dummy);

    Route route;
    route.reserve(tour.size() - 1);
    for (auto it = pos + 1; it != tour.end(); ++it) route.push_back(*it);
    for (auto it = tour.begin(); it != pos; ++it) route.push_back(*it);
    return route;
}

}  // namespace inspath
