#include "support/meshes.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <map>

namespace testsupport {

using inspath::Mesh;
using inspath::Point3;

namespace {

// Outward-wound triangles of the unit cube [0,1]^3.
const std::array<std::array<Point3, 3>, 12>& cube_triangles() {
    static const std::array<std::array<Point3, 3>, 12> triangles = {{
        {{{0, 0, 0}, {1, 1, 0}, {1, 0, 0}}},  // bottom
        {{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}}},
        {{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}},  // top
        {{{0, 0, 1}, {1, 1, 1}, {0, 1, 1}}},
        {{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}}},  // y = 0
        {{{0, 0, 0}, {1, 0, 1}, {0, 0, 1}}},
        {{{0, 1, 0}, {1, 1, 1}, {1, 1, 0}}},  // y = 1
        {{{0, 1, 0}, {0, 1, 1}, {1, 1, 1}}},
        {{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}}},  // x = 0
        {{{0, 0, 0}, {0, 1, 1}, {0, 1, 0}}},
        {{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}},  // x = 1
        {{{1, 0, 0}, {1, 1, 1}, {1, 0, 1}}},
    }};
    return triangles;
}

void append_f32_le(std::string& out, float value) {
    std::uint32_t bits;
    std::memcpy(&bits, &value, sizeof bits);
    out.push_back(static_cast<char>(bits & 0xFF));
    out.push_back(static_cast<char>((bits >> 8) & 0xFF));
    out.push_back(static_cast<char>((bits >> 16) & 0xFF));
    out.push_back(static_cast<char>((bits >> 24) & 0xFF));
}

}  // namespace

std::string unit_cube_stl_ascii() {
    std::string out = "solid cube\n";
    for (const auto& tri : cube_triangles()) {
        out += "  facet normal 0 0 0\n    outer loop\n";
        for (const auto& v : tri) {
            out += "      vertex " + std::to_string(v.x) + " " + std::to_string(v.y) + " " +
                   std::to_string(v.z) + "\n";
        }
        out += "    endloop\n  endfacet\n";
    }
    out += "endsolid cube\n";
    return out;
}

std::string unit_cube_stl_binary() {
    std::string out(80, '\0');
    const auto& triangles = cube_triangles();
    const std::uint32_t count = static_cast<std::uint32_t>(triangles.size());
    out.push_back(static_cast<char>(count & 0xFF));
    out.push_back(static_cast<char>((count >> 8) & 0xFF));
    out.push_back(static_cast<char>((count >> 16) & 0xFF));
    out.push_back(static_cast<char>((count >> 24) & 0xFF));
    for (const auto& tri : triangles) {
        for (int i = 0; i < 3; ++i) append_f32_le(out, 0.0f);  // stored normal, ignored
        for (const auto& v : tri) {
            append_f32_le(out, static_cast<float>(v.x));
            append_f32_le(out, static_cast<float>(v.y));
            append_f32_le(out, static_cast<float>(v.z));
        }
        out.push_back('\0');
        out.push_back('\0');
    }
    return out;
}

std::string unit_cube_obj() {
    // Shared-vertex cube, same windings as the STL variant.
    std::map<std::array<double, 3>, int> ids;
    std::string vertices, faces;
    for (const auto& tri : cube_triangles()) {
        faces += "f";
        for (const auto& v : tri) {
            auto [it, inserted] = ids.try_emplace({v.x, v.y, v.z}, static_cast<int>(ids.size()) + 1);
            if (inserted)
                vertices += "v " + std::to_string(v.x) + " " + std::to_string(v.y) + " " +
                            std::to_string(v.z) + "\n";
            faces += " " + std::to_string(it->second);
        }
        faces += "\n";
    }
    return "# unit cube\n" + vertices + faces;
}

std::string single_triangle_stl() {
    return "solid tri\n"
           "  facet normal 0 0 1\n"
           "    outer loop\n"
           "      vertex 0 0 0\n"
           "      vertex 1 0 0\n"
           "      vertex 0 1 0\n"
           "    endloop\n"
           "  endfacet\n"
           "endsolid tri\n";
}

Mesh icosphere(int levels) {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point3> base = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
        {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1},
    };
    for (auto& v : base) v = inspath::normalized(v);
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
    };

    for (int level = 0; level < levels; ++level) {
        std::map<std::pair<int, int>, int> midpoints;
        auto midpoint = [&](int a, int b) {
            const std::pair<int, int> key = std::minmax(a, b);
            auto it = midpoints.find(key);
            if (it != midpoints.end()) return it->second;
            const int id = static_cast<int>(base.size());
            base.push_back(inspath::normalized(base[a] + base[b]));
            midpoints.emplace(key, id);
            return id;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            const int ab = midpoint(f[0], f[1]);
            const int bc = midpoint(f[1], f[2]);
            const int ca = midpoint(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }

    std::vector<std::array<Point3, 3>> triangles;
    triangles.reserve(faces.size());
    for (const auto& f : faces) triangles.push_back({base[f[0]], base[f[1]], base[f[2]]});
    return inspath::mesh_from_triangles(triangles);
}

}  // namespace testsupport
