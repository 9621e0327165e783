#include "inspath/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "inspath/errors.hpp"
#include "inspath/format_util.hpp"

namespace inspath {

namespace {

void append_json_string(std::string& out, const std::string& text) {
    out.push_back('"');
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

const nlohmann::json& field(const nlohmann::json& object, const char* key) {
    const auto it = object.find(key);
    if (it == object.end()) throw SchemaError(key, "missing required field");
    return *it;
}

double number_at(const nlohmann::json& value, const std::string& path) {
    if (!value.is_number()) throw SchemaError(path, "expected a number");
    const double d = value.get<double>();
    if (!std::isfinite(d)) throw SchemaError(path, "value must be finite");
    return d;
}

int index_at(const nlohmann::json& value, const std::string& path, int n) {
    if (!value.is_number_integer()) throw SchemaError(path, "expected an integer node index");
    const long long raw = value.get<long long>();
    if (raw < 0 || raw >= n) throw SchemaError(path, "node index out of range");
    return static_cast<int>(raw);
}

}  // namespace

std::string write_instance(const Instance& instance) {
    std::string out;
    out += "{\n  \"name\": ";
    append_json_string(out, instance.name);
    out += ",\n  \"n\": " + std::to_string(instance.n());

    out += ",\n  \"points\": [";
    for (int i = 0; i < instance.n(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        const auto& p = instance.points[i];
        out += "    [" + format_double(p.x) + ", " + format_double(p.y) + ", " +
               format_double(p.z) + "]";
    }
    out += instance.n() > 0 ? "\n  ]" : "]";

    out += ",\n  \"edges\": [";
    bool first_edge = true;
    for (int i = 0; i < instance.n(); ++i) {
        for (int j = i + 1; j < instance.n(); ++j) {
            if (!instance.costs.has(i, j)) continue;
            out += first_edge ? "\n" : ",\n";
            first_edge = false;
            out += "    [" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                   format_double(instance.costs.at(i, j)) + "]";
        }
    }
    out += first_edge ? "]" : "\n  ]";

    out += ",\n  \"metadata\": {";
    bool first_meta = true;
    for (const auto& [key, value] : instance.metadata) {
        out += first_meta ? "\n" : ",\n";
        first_meta = false;
        out += "    ";
        append_json_string(out, key);
        out += ": ";
        append_json_string(out, value);
    }
    out += first_meta ? "}" : "\n  }";

    out += "\n}\n";
    return out;
}

Instance read_instance(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("$", std::string("not a valid document: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("$", "top level must be an object");

    static const std::set<std::string> known = {"name", "n", "points", "edges", "metadata"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw SchemaError(key, "unknown field");

    Instance instance;

    const auto& name = field(doc, "name");
    if (!name.is_string()) throw SchemaError("name", "expected a string");
    instance.name = name.get<std::string>();

    const auto& n_field = field(doc, "n");
    if (!n_field.is_number_integer()) throw SchemaError("n", "expected an integer");
    const long long n_raw = n_field.get<long long>();
    if (n_raw < 1) throw SchemaError("n", "node count must be >= 1");
    if (n_raw > 1'000'000) throw SchemaError("n", "node count too large");
    const int n = static_cast<int>(n_raw);

    const auto& points = field(doc, "points");
    if (!points.is_array()) throw SchemaError("points", "expected an array");
    if (static_cast<int>(points.size()) != n)
        throw SchemaError("points", "length does not match n");
    instance.points.reserve(points.size());
    for (int i = 0; i < n; ++i) {
        const auto path = "points[" + std::to_string(i) + "]";
        const auto& entry = points[i];
        if (!entry.is_array() || entry.size() != 3)
            throw SchemaError(path, "expected [x, y, z]");
        instance.points.push_back({number_at(entry[0], path + "[0]"),
                                   number_at(entry[1], path + "[1]"),
                                   number_at(entry[2], path + "[2]")});
    }

    instance.costs = CostMatrix(n);
    const auto& edges = field(doc, "edges");
    if (!edges.is_array()) throw SchemaError("edges", "expected an array");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto path = "edges[" + std::to_string(e) + "]";
        const auto& entry = edges[e];
        if (!entry.is_array() || entry.size() != 3)
            throw SchemaError(path, "expected [i, j, cost]");
        const int i = index_at(entry[0], path + "[0]", n);
        const int j = index_at(entry[1], path + "[1]", n);
        if (i >= j) throw SchemaError(path, "edges must satisfy i < j");
        if (instance.costs.has(i, j)) throw SchemaError(path, "duplicate edge");
        const double cost = number_at(entry[2], path + "[2]");
        if (cost < 0.0) throw SchemaError(path + "[2]", "cost must be >= 0");
        instance.costs.set(i, j, cost);
    }

    const auto& metadata = field(doc, "metadata");
    if (!metadata.is_object()) throw SchemaError("metadata", "expected an object");
    for (const auto& [key, value] : metadata.items()) {
        if (!value.is_string())
            throw SchemaError("metadata." + key, "expected a string value");
        instance.metadata[key] = value.get<std::string>();
    }

    return instance;
}

}  // namespace inspath
