#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gtrunc/graph.hpp"

namespace gtrunc {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard graph6 line (without trailing newline). Supports n <= 65535.
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects out-of-range bytes, wrong length and nonzero
// padding, naming the offending byte offset.
Graph decode_graph6(std::string_view line);

}  // namespace gtrunc
