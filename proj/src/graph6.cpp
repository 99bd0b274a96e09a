#include "lenergy/graph6.hpp"

namespace lenergy {

namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;

std::size_t body_length(int order) {
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + kBias));

  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line", 0);

  for (std::size_t k = 0; k < line.size(); ++k) {
    const int byte = static_cast<unsigned char>(line[k]);
    if (byte < kBias || byte > kMaxPrintable) {
      throw ParseError("graph6 byte " + std::to_string(byte) + " outside 63..126", k);
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > kMaxOrder) {
    throw ParseError("graph6 order exceeds " + std::to_string(kMaxOrder), 0);
  }
  const std::size_t expected = 1 + body_length(n);
  if (line.size() < expected) throw ParseError("truncated graph6 bit stream", line.size());
  if (line.size() > expected) throw ParseError("trailing bytes after graph6 bit stream", expected);

  Graph g(n);
  std::size_t pos = 1;
  int shift = -1;
  int group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (shift < 0) {
        group = static_cast<unsigned char>(line[pos++]) - kBias;
        shift = 5;
      }
      if ((group >> shift--) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_start = 0;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    const std::size_t this_start = line_start;
    line_start += line.size() + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(decode_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.detail(),
                       this_start + e.offset());
    }
  }
  return graphs;
}

}  // namespace lenergy
