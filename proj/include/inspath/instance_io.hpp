#pragma once

#include <string>
#include <string_view>

#include "inspath/instance.hpp"

namespace inspath {

// Self-describing JSON document with fields name, n, points, edges and
// metadata. Costs and coordinates are serialized as the shortest decimal
// that round-trips the 64-bit float, so read_instance(write_instance(i))
// reproduces the instance bit for bit and equal instances always serialize
// to identical bytes.
std::string write_instance(const Instance& instance);

// Strict parser: unknown fields, malformed entries and negative costs are
// rejected with a SchemaError naming the offending path.
Instance read_instance(std::string_view bytes);

}  // namespace inspath
