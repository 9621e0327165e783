#include "inspath/segmentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "inspath/errors.hpp"

namespace inspath {

namespace {

// face -> faces sharing at least one edge, each adjacency list sorted.
std::vector<std::vector<int>> face_adjacency(const Mesh& mesh) {
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& face = mesh.faces[f];
        for (int e = 0; e < 3; ++e) {
            int a = face[e];
            int b = face[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            edge_faces[{a, b}].push_back(f);
        }
    }
    std::vector<std::vector<int>> adjacency(mesh.face_count());
    for (const auto& [edge, faces] : edge_faces) {
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = i + 1; j < faces.size(); ++j) {
                adjacency[faces[i]].push_back(faces[j]);
                adjacency[faces[j]].push_back(faces[i]);
            }
    }
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adjacency;
}

struct GrowingPatch {
    std::vector<int> face_ids;
    double area = 0.0;
    Point3 weighted_normal;  // sum of area * face normal, not normalized

    // Max angle between any member normal (plus optionally one candidate)
    // and the mean of the weighted normal sum.
    static double deviation(const Mesh& mesh, const std::vector<int>& members,
                            const Point3& weighted_sum, int candidate = -1) {
        const Point3 mean = normalized(weighted_sum);
        if (norm(weighted_sum) < 1e-12) return 3.1415926535897932;
        double worst = 0.0;
        for (int f : members) worst = std::max(worst, angle_between(mesh.face_normals[f], mean));
        if (candidate >= 0)
            worst = std::max(worst, angle_between(mesh.face_normals[candidate], mean));
        return worst;
    }
};

}  // namespace

SegmentationResult segment_mesh(const Mesh& mesh, const SegmentationConfig& config) {
    if (mesh.face_count() == 0) throw Error("cannot segment an empty mesh");
    if (!(config.max_normal_deviation > 0.0) || config.max_normal_deviation >= 3.14159265358979)
        throw Error("max_normal_deviation must lie in (0, pi)");
    if (config.standoff < 0.0) throw Error("standoff must be >= 0");

    const double max_area = config.resolved_max_area(mesh.total_area());
    if (!(max_area > 0.0)) throw Error("patch area threshold must be positive");
    const double max_dev = config.max_normal_deviation;
    const auto adjacency = face_adjacency(mesh);

    SegmentationResult result;
    std::vector<char> assigned(mesh.face_count(), 0);
    std::vector<int> rejected_mark(mesh.face_count(), -1);  // patch id that last rejected the face

    for (int seed = 0; seed < mesh.face_count(); ++seed) {
        if (assigned[seed]) continue;
        const int patch_id = static_cast<int>(result.patches.size());

        GrowingPatch growing;
        growing.face_ids.push_back(seed);
        growing.area = mesh.face_areas[seed];
        growing.weighted_normal = mesh.face_normals[seed] * mesh.face_areas[seed];
        assigned[seed] = 1;
        if (growing.area > max_area) result.oversized_faces.push_back(seed);

        std::priority_queue<int, std::vector<int>, std::greater<int>> frontier;
        for (int neighbor : adjacency[seed]) frontier.push(neighbor);

        while (!frontier.empty()) {
            const int candidate = frontier.top();
            frontier.pop();
            if (assigned[candidate] || rejected_mark[candidate] == patch_id) continue;

            const double new_area = growing.area + mesh.face_areas[candidate];
            if (new_area > max_area) {
                rejected_mark[candidate] = patch_id;
                continue;
            }
            const Point3 new_weighted =
                growing.weighted_normal + mesh.face_normals[candidate] * mesh.face_areas[candidate];
            if (GrowingPatch::deviation(mesh, growing.face_ids, new_weighted, candidate) > max_dev) {
                rejected_mark[candidate] = patch_id;
                continue;
            }

            growing.face_ids.push_back(candidate);
            growing.area = new_area;
            growing.weighted_normal = new_weighted;
            assigned[candidate] = 1;
            for (int neighbor : adjacency[candidate])
                if (!assigned[neighbor] && rejected_mark[neighbor] != patch_id)
                    frontier.push(neighbor);
        }

        Patch patch;
        patch.face_ids = std::move(growing.face_ids);
        std::sort(patch.face_ids.begin(), patch.face_ids.end());
        patch.area = growing.area;
        patch.mean_normal = normalized(growing.weighted_normal);
        patch.max_normal_deviation = 0.0;
        Point3 centroid_sum{0.0, 0.0, 0.0};
        for (int f : patch.face_ids) {
            patch.max_normal_deviation = std::max(
                patch.max_normal_deviation, angle_between(mesh.face_normals[f], patch.mean_normal));
            centroid_sum = centroid_sum + mesh.face_centroid(f) * mesh.face_areas[f];
        }
        patch.representative_point = centroid_sum * (1.0 / patch.area);
        result.patches.push_back(std::move(patch));
    }
    return result;
}

std::vector<Point3> inspection_points(const std::vector<Patch>& patches,
                                      const SegmentationConfig& config) {
    std::vector<Point3> points;
    points.reserve(patches.size());
    for (const auto& patch : patches)
        points.push_back(patch.representative_point + patch.mean_normal * config.standoff);
    return points;
}

}  // namespace inspath
