#include "inspath/mesh.hpp"

#include <cctype>
#include <cstdint>
#include <cstring>
#include <map>
#include <sstream>

#include "inspath/errors.hpp"

namespace inspath {

namespace {

struct VertexKey {
    double x, y, z;
    bool operator<(const VertexKey& other) const {
        if (x != other.x) return x < other.x;
        if (y != other.y) return y < other.y;
        return z < other.z;
    }
};

class MeshBuilder {
public:
    explicit MeshBuilder(std::vector<std::string>* warnings) : warnings_(warnings) {}

    void add_triangle(const Point3& a, const Point3& b, const Point3& c) {
        ++triangle_index_;
        if (!finite(a) || !finite(b) || !finite(c))
            throw ParseError(0, "non-finite vertex coordinate in triangle " +
                                    std::to_string(triangle_index_));
        const Point3 doubled_normal = cross(b - a, c - a);
        const double area = 0.5 * norm(doubled_normal);
        if (area <= 0.0) {
            if (warnings_)
                warnings_->push_back("dropped degenerate face " +
                                     std::to_string(triangle_index_ - 1) + " (zero area)");
            return;
        }
        mesh_.faces.push_back({vertex_id(a), vertex_id(b), vertex_id(c)});
        mesh_.face_normals.push_back(normalized(doubled_normal));
        mesh_.face_areas.push_back(area);
    }

    Mesh take() { return std::move(mesh_); }

private:
    int vertex_id(const Point3& p) {
        const VertexKey key{p.x, p.y, p.z};
        auto [it, inserted] = index_.try_emplace(key, static_cast<int>(mesh_.vertices.size()));
        if (inserted) mesh_.vertices.push_back(p);
        return it->second;
    }

    Mesh mesh_;
    std::map<VertexKey, int> index_;
    std::vector<std::string>* warnings_;
    int triangle_index_ = 0;
};

double parse_coordinate(const std::string& token, std::size_t line) {
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw ParseError(line, "bad number '" + token + "'");
        return value;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, "bad number '" + token + "'");
    }
}

Mesh load_stl_ascii(std::string_view bytes, std::vector<std::string>* warnings) {
    MeshBuilder builder(warnings);
    std::istringstream stream{std::string(bytes)};
    std::string line;
    std::size_t line_number = 0;
    bool in_solid = false;
    bool saw_endsolid = false;
    std::vector<Point3> pending;

    while (std::getline(stream, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword)) continue;

        if (keyword == "solid") {
            in_solid = true;
        } else if (keyword == "facet" || keyword == "outer" || keyword == "endfacet") {
            if (!in_solid) throw ParseError(line_number, "'" + keyword + "' outside solid");
        } else if (keyword == "vertex") {
            if (!in_solid) throw ParseError(line_number, "'vertex' outside solid");
            std::string sx, sy, sz;
            if (!(tokens >> sx >> sy >> sz))
                throw ParseError(line_number, "vertex needs three coordinates");
            pending.push_back({parse_coordinate(sx, line_number), parse_coordinate(sy, line_number),
                               parse_coordinate(sz, line_number)});
        } else if (keyword == "endloop") {
            if (pending.size() != 3)
                throw ParseError(line_number, "facet has " + std::to_string(pending.size()) +
                                                  " vertices, expected 3");
            builder.add_triangle(pending[0], pending[1], pending[2]);
            pending.clear();
        } else if (keyword == "endsolid") {
            saw_endsolid = true;
        } else {
            throw ParseError(line_number, "unexpected token '" + keyword + "'");
        }
    }
    if (!in_solid) throw ParseError(line_number, "no 'solid' header found");
    if (!saw_endsolid) throw ParseError(line_number, "missing 'endsolid'");
    if (!pending.empty()) throw ParseError(line_number, "unterminated facet");
    return builder.take();
}

float read_f32_le(const unsigned char* p) {
    std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                         (static_cast<std::uint32_t>(p[1]) << 8) |
                         (static_cast<std::uint32_t>(p[2]) << 16) |
                         (static_cast<std::uint32_t>(p[3]) << 24);
    float value;
    std::memcpy(&value, &bits, sizeof value);
    return value;
}

Mesh load_stl_binary(std::string_view bytes, std::vector<std::string>* warnings) {
    constexpr std::size_t kHeader = 80;
    constexpr std::size_t kTriangleRecord = 50;  // 12 floats + uint16 attribute
    if (bytes.size() < kHeader + 4) throw ParseError(0, "binary STL shorter than its header");

    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::uint32_t count = static_cast<std::uint32_t>(data[80]) |
                                (static_cast<std::uint32_t>(data[81]) << 8) |
                                (static_cast<std::uint32_t>(data[82]) << 16) |
                                (static_cast<std::uint32_t>(data[83]) << 24);
    if (bytes.size() != kHeader + 4 + static_cast<std::size_t>(count) * kTriangleRecord)
        throw ParseError(0, "binary STL size does not match its triangle count");

    MeshBuilder builder(warnings);
    for (std::uint32_t t = 0; t < count; ++t) {
        const unsigned char* record = data + kHeader + 4 + static_cast<std::size_t>(t) * kTriangleRecord;
        Point3 corners[3];
        for (int v = 0; v < 3; ++v) {
            const unsigned char* base = record + 12 + 12 * v;  // skip the stored normal
            corners[v] = {read_f32_le(base), read_f32_le(base + 4), read_f32_le(base + 8)};
        }
        builder.add_triangle(corners[0], corners[1], corners[2]);
    }
    return builder.take();
}

// OBJ subset: 'v x y z' and triangular 'f a b c' lines (1-based indices,
// 'a/t/n' suffixes tolerated). Everything else except comments is rejected.
Mesh load_obj(std::string_view bytes, std::vector<std::string>* warnings) {
    std::istringstream stream{std::string(bytes)};
    std::string line;
    std::size_t line_number = 0;
    std::vector<Point3> file_vertices;
    MeshBuilder builder(warnings);
    bool saw_face = false;

    while (std::getline(stream, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword)) continue;
        if (keyword[0] == '#') continue;

        if (keyword == "v") {
            std::string sx, sy, sz;
            if (!(tokens >> sx >> sy >> sz))
                throw ParseError(line_number, "vertex needs three coordinates");
            file_vertices.push_back({parse_coordinate(sx, line_number),
                                     parse_coordinate(sy, line_number),
                                     parse_coordinate(sz, line_number)});
        } else if (keyword == "f") {
            std::vector<int> ids;
            std::string ref;
            while (tokens >> ref) {
                const std::string head = ref.substr(0, ref.find('/'));
                int id = 0;
                try {
                    id = std::stoi(head);
                } catch (const std::exception&) {
                    throw ParseError(line_number, "bad face index '" + ref + "'");
                }
                if (id < 1 || id > static_cast<int>(file_vertices.size()))
                    throw ParseError(line_number, "face index " + head + " out of range");
                ids.push_back(id - 1);
            }
            if (ids.size() != 3)
                throw ParseError(line_number, "only triangular faces are supported");
            builder.add_triangle(file_vertices[ids[0]], file_vertices[ids[1]],
                                 file_vertices[ids[2]]);
            saw_face = true;
        } else {
            throw ParseError(line_number, "unsupported OBJ element '" + keyword + "'");
        }
    }
    if (file_vertices.empty() && !saw_face) throw ParseError(line_number, "empty OBJ stream");
    return builder.take();
}

}  // namespace

Mesh mesh_from_triangles(const std::vector<std::array<Point3, 3>>& triangles,
                         std::vector<std::string>* warnings) {
    MeshBuilder builder(warnings);
    for (const auto& t : triangles) builder.add_triangle(t[0], t[1], t[2]);
    return builder.take();
}

Mesh load_mesh(std::string_view bytes, MeshFormat format, std::vector<std::string>* warnings) {
    if (bytes.empty()) throw ParseError(0, "empty stream");
    switch (format) {
        case MeshFormat::StlAscii:
            return load_stl_ascii(bytes, warnings);
        case MeshFormat::StlBinary:
            return load_stl_binary(bytes, warnings);
        case MeshFormat::ObjSubset:
            return load_obj(bytes, warnings);
    }
    throw Error("unknown mesh format");
}

MeshFormat detect_mesh_format(std::string_view bytes, std::string_view filename) {
    const auto dot = filename.rfind('.');
    std::string ext;
    if (dot != std::string_view::npos) {
        for (char c : filename.substr(dot + 1))
            ext.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (ext == "obj") return MeshFormat::ObjSubset;

    // "solid" prefixes also appear in binary files; trust the size check.
    if (bytes.size() >= 84) {
        const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
        const std::uint32_t count = static_cast<std::uint32_t>(data[80]) |
                                    (static_cast<std::uint32_t>(data[81]) << 8) |
                                    (static_cast<std::uint32_t>(data[82]) << 16) |
                                    (static_cast<std::uint32_t>(data[83]) << 24);
        if (bytes.size() == 84 + static_cast<std::size_t>(count) * 50) return MeshFormat::StlBinary;
    }
    return MeshFormat::StlAscii;
}

}  // namespace inspath
