#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rtl/graph.hpp"

namespace rtl {

/// Malformed graph6 input; byte_offset points at the offending byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

/// Standard graph6 text encoding (6-bit printable characters, upper-triangle
/// bits in column order). Bit-exact with the published format.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

}  // namespace rtl
