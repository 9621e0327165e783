#include "inspath/generate.hpp"

#include <cmath>

#include "inspath/errors.hpp"
#include "inspath/format_util.hpp"
#include "inspath/graph_build.hpp"
#include "inspath/rng.hpp"

namespace inspath {

namespace {

constexpr double kPi = 3.14159265358979323846;

Point3 sample_point(SurfaceKind kind, Rng& rng) {
    switch (kind) {
        case SurfaceKind::Sphere: {
            // Uniform on the unit sphere.
            const double z = rng.uniform(-1.0, 1.0);
            const double phi = rng.uniform(0.0, 2.0 * kPi);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            return {r * std::cos(phi), r * std::sin(phi), z};
        }
        case SurfaceKind::Torus: {
            const double major = 1.0, minor = 0.35;
            const double u = rng.uniform(0.0, 2.0 * kPi);
            const double v = rng.uniform(0.0, 2.0 * kPi);
            const double ring = major + minor * std::cos(v);
            return {ring * std::cos(u), ring * std::sin(u), minor * std::sin(v)};
        }
        case SurfaceKind::BoxPanel: {
            // Gently bulged rectangular panel, door-skin-like.
            const double x = rng.uniform(0.0, 1.0);
            const double y = rng.uniform(0.0, 0.6);
            const double z = 0.08 * std::sin(kPi * x) * std::sin(kPi * y / 0.6);
            return {x, y, z};
        }
        case SurfaceKind::UniformCloud:
            return {rng.uniform01(), rng.uniform01(), rng.uniform01()};
    }
    throw Error("unknown surface kind");
}

}  // namespace

SurfaceKind parse_surface_kind(std::string_view text) {
    if (text == "sphere") return SurfaceKind::Sphere;
    if (text == "torus") return SurfaceKind::Torus;
    if (text == "box-panel") return SurfaceKind::BoxPanel;
    if (text == "uniform-cloud") return SurfaceKind::UniformCloud;
    throw UsageError("unknown surface kind '" + std::string(text) +
                     "' (expected sphere | torus | box-panel | uniform-cloud)");
}

std::string surface_kind_name(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::Sphere: return "sphere";
        case SurfaceKind::Torus: return "torus";
        case SurfaceKind::BoxPanel: return "box-panel";
        case SurfaceKind::UniformCloud: return "uniform-cloud";
    }
    return "unknown";
}

Instance generate_instance(SurfaceKind kind, int n, int knn, std::uint64_t seed) {
    if (n < 1) throw Error("instance needs at least one node");
    if (knn < 1) throw Error("knn must be positive");

    Rng rng(seed);
    std::vector<Point3> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i) points.push_back(sample_point(kind, rng));

    SegmentationConfig config;
    config.knn = knn;

    const std::string name = surface_kind_name(kind) + "-n" + std::to_string(n) + "-k" +
                             std::to_string(knn) + "-s" + format_u64(seed);
    std::vector<std::pair<int, int>> repairs;
    Instance instance = build_graph(name, points, config, euclidean_cost, &repairs);
    instance.metadata["kind"] = surface_kind_name(kind);
    instance.metadata["knn"] = std::to_string(knn);
    instance.metadata["seed"] = format_u64(seed);
    if (!repairs.empty()) {
        std::string joined;
        for (const auto& [i, j] : repairs) {
            if (!joined.empty()) joined += ";";
            joined += std::to_string(i) + "-" + std::to_string(j);
        }
        instance.metadata["repair_edges"] = joined;
    }
    return instance;
}

}  // namespace inspath
