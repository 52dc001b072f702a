#pragma once

#include <string>
#include <string_view>

#include "xspec/graph.hpp"

namespace xspec {

/// Largest order representable by the 4-byte graph6 size prefix.
inline constexpr int kGraph6MaxOrder = 258047;

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Standard graph6 encoding (no ">>graph6<<" header, no newline).
/// The bipartition, if any, is not represented.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 record. Trailing CR/LF is ignored; anything else
/// malformed throws Graph6Error.
Graph graph6_decode(std::string_view text);

}  // namespace xspec
