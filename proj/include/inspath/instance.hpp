#pragma once

#include <map>
#include <string>
#include <vector>

#include "inspath/cost_matrix.hpp"
#include "inspath/geometry.hpp"

namespace inspath {

// A named routing problem: 3D inspection points plus a possibly-incomplete
// symmetric cost matrix. Immutable by convention once built; nothing in the
// library mutates a shared instance.
struct Instance {
    std::string name;
    std::vector<Point3> points;
    CostMatrix costs;
    std::map<std::string, std::string> metadata;

    int n() const { return static_cast<int>(points.size()); }
    int edge_count() const { return costs.edge_count(); }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.name == b.name && a.points == b.points && a.costs == b.costs &&
               a.metadata == b.metadata;
    }
};

}  // namespace inspath
