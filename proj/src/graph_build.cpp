#include "inspath/graph_build.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "inspath/errors.hpp"

namespace inspath {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

Instance build_graph(std::string name, const std::vector<Point3>& points,
                     const SegmentationConfig& config, const CostFunction& cost,
                     std::vector<std::pair<int, int>>* repair_edges) {
    const int n = static_cast<int>(points.size());
    if (n < 1) throw Error("build_graph needs at least one point");
    if (config.knn < 1) throw Error("knn must be positive");
    for (const auto& p : points)
        if (!finite(p)) throw Error("non-finite point coordinate");

    Instance instance;
    instance.name = std::move(name);
    instance.points = points;
    instance.costs = CostMatrix(n);

    const int k = std::min(config.knn, n - 1);
    std::vector<std::vector<double>> pairwise(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairwise[i][j] = pairwise[j][i] = cost(points[i], points[j]);

    UnionFind components(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (pairwise[i][a] != pairwise[i][b]) return pairwise[i][a] < pairwise[i][b];
            return a < b;
        });
        int taken = 0;
        for (int candidate : order) {
            if (candidate == i) continue;
            if (taken == k) break;
            instance.costs.set(i, candidate, pairwise[i][candidate]);
            components.unite(i, candidate);
            ++taken;
        }
    }

    // Connectivity repair: keep adding the globally shortest cross-component
    // pair (ties to the lexicographically smallest pair).
    for (;;) {
        bool connected = true;
        for (int v = 1; v < n && connected; ++v) connected = components.find(v) == components.find(0);
        if (connected) break;

        double best = std::numeric_limits<double>::infinity();
        int best_i = -1, best_j = -1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (components.find(i) == components.find(j)) continue;
                if (pairwise[i][j] < best) {
                    best = pairwise[i][j];
                    best_i = i;
                    best_j = j;
                }
            }
        instance.costs.set(best_i, best_j, best);
        components.unite(best_i, best_j);
        if (repair_edges) repair_edges->push_back({best_i, best_j});
    }
    return instance;
}

}  // namespace inspath
