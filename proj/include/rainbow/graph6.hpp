#pragma once

#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Largest order representable with the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Standard graph6 line (no trailing newline). Orders above 62 are rejected.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 line; a trailing '\n' or '\r\n' is ignored. Throws
/// InputError on malformed headers, bytes outside 63..126, wrong length, or
/// nonzero padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace rainbow
