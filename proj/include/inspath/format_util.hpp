#pragma once

#include <charconv>
#include <cstdint>
#include <string>

#include "inspath/errors.hpp"

namespace inspath {

// Shortest decimal form that round-trips to the same 64-bit float. Used by
// every serializer so outputs are byte-identical across platforms.
inline std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

inline std::string format_u64(std::uint64_t value) {
    char buffer[24];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

inline double parse_double(const std::string& text) {
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size())
        throw Error("bad floating-point literal '" + text + "'");
    return value;
}

}  // namespace inspath
