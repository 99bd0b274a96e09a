#ifndef LENERGY_GRAPH6_HPP
#define LENERGY_GRAPH6_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lenergy/graph.hpp"

namespace lenergy {

/// Malformed text input; offset() is the zero-based byte position at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
        detail_(what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }
  /// Message without the offset suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

// graph6: one byte n+63, then the upper triangle x01, x02, x12, x03, ... packed
// big-endian into 6-bit groups (zero padded), each written as value+63. Only
// the single-byte size prefix is supported, so n <= 62.

std::string encode_graph6(const Graph& g);

/// Accepts a line with or without a trailing "\n" / "\r\n". Padding bits in
/// the final byte are ignored.
Graph decode_graph6(std::string_view line);

/// Reads every non-empty line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace lenergy

#endif  // LENERGY_GRAPH6_HPP
