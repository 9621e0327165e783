#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "inspath/geometry.hpp"

namespace inspath {

enum class MeshFormat { StlAscii, StlBinary, ObjSubset };

// Triangulated surface with per-face normal and area cached at load time.
// Vertices are deduplicated by exact coordinate equality and face normals are
// recomputed from vertex winding (right-hand rule); normals stored in the
// source file are ignored.
struct Mesh {
    std::vector<Point3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<Point3> face_normals;  // unit length
    std::vector<double> face_areas;

    int face_count() const { return static_cast<int>(faces.size()); }

    double total_area() const {
        double sum = 0.0;
        for (double a : face_areas) sum += a;
        return sum;
    }

    Point3 face_centroid(int face) const {
        const auto& f = faces[face];
        return (vertices[f[0]] + vertices[f[1]] + vertices[f[2]]) * (1.0 / 3.0);
    }
};

// Parses the given byte stream. Zero-area triangles are dropped with a
// warning appended to `warnings` (when provided) rather than failing the
// load. Throws ParseError on malformed input.
Mesh load_mesh(std::string_view bytes, MeshFormat format,
               std::vector<std::string>* warnings = nullptr);

// Builds a mesh directly from triangle soup; same dedup/normal rules as
// load_mesh. Used by loaders and by synthetic test meshes.
Mesh mesh_from_triangles(const std::vector<std::array<Point3, 3>>& triangles,
                         std::vector<std::string>* warnings = nullptr);

// Best-effort format sniff for CLI convenience: OBJ when the payload has
// v/f lines, binary STL when the 84-byte header is consistent with the file
// size, ASCII STL otherwise.
MeshFormat detect_mesh_format(std::string_view bytes, std::string_view filename);

}  // namespace inspath
