#pragma once

#include <string>
#include <string_view>

#include "genergy/graph.hpp"

namespace genergy {

// Standard graph6 layout: one size byte (n + 63, n <= 62), then the upper
// triangle read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed
// big-endian into 6-bit groups, zero padded, each offset by 63.

std::string graph6_encode(const Graph& g);

/// Throws ParseError with the byte offset of the first bad character, or
/// CapacityError if the header names more than 32 vertices.
Graph graph6_decode(std::string_view text);

/// True if every byte is a printable graph6 character (63..126).
bool looks_like_graph6(std::string_view text) noexcept;

}  // namespace genergy
