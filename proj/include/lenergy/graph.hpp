#ifndef LENERGY_GRAPH_HPP
#define LENERGY_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lenergy {

/// Largest order representable by a Graph (one 64-bit word per adjacency row,
/// single-byte graph6 size prefix).
inline constexpr int kMaxOrder = 62;

using Row = std::uint64_t;

/// Index of a vertex relative to one particular graph.
struct VertexId {
  int index = 0;
  friend constexpr bool operator==(VertexId, VertexId) = default;
};

/// Simple undirected graph on vertices 0..order-1, stored as per-vertex
/// neighbour bitsets. Rows beyond order() are always zero, so the defaulted
/// comparisons are structural equality.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of the given order.
  explicit Graph(int order);

  int order() const { return order_; }
  bool empty() const { return order_ == 0; }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  Row neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;

  /// Bitmask with one bit per vertex.
  Row vertex_mask() const { return (Row{1} << order_) - 1; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  std::span<const Row> rows() const { return {rows_.data(), static_cast<std::size_t>(order_)}; }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend Graph graph_from_rows(std::span<const Row> rows);

 private:
  void check_pair(int u, int v) const;

  int order_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

/// Builds a graph from explicit adjacency rows; validates symmetry and the
/// empty diagonal.
Graph graph_from_rows(std::span<const Row> rows);

Graph graph_from_edges(int order, std::span<const std::pair<int, int>> edges);

/// Upper-triangle adjacency read column by column (x01, x02, x12, x03, ...),
/// the bit order used by graph6. Lexicographic comparison of two graphs of
/// equal order under this order matches comparison of their graph6 strings.
bool bitstring_less(const Graph& a, const Graph& b);

/// Relabels vertices: vertex v of g becomes vertex perm[v] of the result.
Graph permute(const Graph& g, std::span<const int> perm);

/// Induced subgraph on the remaining vertices, indices compacted.
Graph delete_vertex(const Graph& g, VertexId v);

/// Block-diagonal union; h's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

int degree(const Graph& g, VertexId v);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff the component containing v is a star K_{1,k} (k >= 0) centred
/// at v. Every vertex of K_1 and K_2 counts as a centre.
bool is_star_center(const Graph& g, VertexId v);

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

}  // namespace lenergy

#endif  // LENERGY_GRAPH_HPP
