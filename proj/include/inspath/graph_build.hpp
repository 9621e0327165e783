#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "inspath/instance.hpp"
#include "inspath/segmentation.hpp"

namespace inspath {

// Robot motion cost between two inspection points. Euclidean by default;
// kept as an interface so a joint-space cost can be plugged in later.
using CostFunction = std::function<double(const Point3&, const Point3&)>;

inline double euclidean_cost(const Point3& a, const Point3& b) { return distance(a, b); }

// Union k-nearest-neighbor graph: edge (i, j) exists iff j is among the k
// nearest neighbors of i or vice versa; ties broken by index. If the result
// is disconnected, the globally shortest inter-component pairs are added
// until it is connected; those pairs are reported through `repair_edges`.
Instance build_graph(std::string name, const std::vector<Point3>& points,
                     const SegmentationConfig& config,
                     const CostFunction& cost = euclidean_cost,
                     std::vector<std::pair<int, int>>* repair_edges = nullptr);

}  // namespace inspath
