#pragma once

#include <vector>

#include "inspath/mesh.hpp"

namespace inspath {

struct SegmentationConfig {
    double max_patch_area = 0.0;        // A_max, m^2; <= 0 means 5% of total mesh area
    double max_normal_deviation = 0.35; // radians, angle to the patch mean normal
    double standoff = 0.15;             // m, sensor offset along the mean normal
    int knn = 4;                        // neighbor count for graph construction

    // A_max resolved against a concrete mesh.
    double resolved_max_area(double total_mesh_area) const {
        return max_patch_area > 0.0 ? max_patch_area : 0.05 * total_mesh_area;
    }
};

// Edge-connected group of faces whose total area and normal spread both stay
// below the configured thresholds.
struct Patch {
    std::vector<int> face_ids;      // sorted ascending
    double area = 0.0;              // sum of member face areas
    Point3 mean_normal;             // area-weighted, normalized
    double max_normal_deviation = 0.0;  // max angle(member normal, mean_normal)
    Point3 representative_point;    // area-weighted centroid of member faces
};

struct SegmentationResult {
    std::vector<Patch> patches;
    // Single faces whose own area already exceeds A_max; they become
    // one-face patches and are reported here.
    std::vector<int> oversized_faces;
};

// Deterministic region growing: seed at the lowest-index unassigned face,
// grow across shared edges while both constraints hold, repeat. The emitted
// patches partition the face set.
SegmentationResult segment_mesh(const Mesh& mesh, const SegmentationConfig& config);

// One inspection point per patch: the representative point pushed out by
// `standoff` along the patch mean normal. Order matches patch order.
std::vector<Point3> inspection_points(const std::vector<Patch>& patches,
                                      const SegmentationConfig& config);

}  // namespace inspath
