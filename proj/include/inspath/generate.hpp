#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "inspath/instance.hpp"

namespace inspath {

// Synthetic stand-ins for real scanned surfaces. Sampling is deterministic
// for a fixed (kind, n, knn, seed) tuple.
enum class SurfaceKind { Sphere, Torus, BoxPanel, UniformCloud };

SurfaceKind parse_surface_kind(std::string_view text);  // throws UsageError
std::string surface_kind_name(SurfaceKind kind);

Instance generate_instance(SurfaceKind kind, int n, int knn, std::uint64_t seed);

}  // namespace inspath
