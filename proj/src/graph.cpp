#include "lenergy/graph.hpp"

#include <algorithm>
#include <string>

namespace lenergy {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v.index < 0 || v.index >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v.index) + " out of range for order " +
                            std::to_string(g.order()));
  }
}

// Bits of `mask` at positions below `pos` stay put; bits above shift down by one.
Row drop_bit(Row mask, int pos) {
  const Row low = mask & ((Row{1} << pos) - 1);
  const Row high = (mask >> (pos + 1)) << pos;
  return low | high;
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." +
                                std::to_string(kMaxOrder));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] |= Row{1} << v;
  rows_[v] |= Row{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~(Row{1} << v);
  rows_[v] &= ~(Row{1} << u);
}

int Graph::add_vertex() {
  if (order_ >= kMaxOrder) throw std::length_error("graph already has the maximum order");
  return order_++;
}

Graph graph_from_rows(std::span<const Row> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Row mask = g.vertex_mask();
  for (int u = 0; u < g.order(); ++u) {
    if (rows[u] & ~mask) throw std::invalid_argument("adjacency row refers to a missing vertex");
    if ((rows[u] >> u) & 1U) throw std::invalid_argument("adjacency has a loop");
    for (Row nb = rows[u]; nb; nb &= nb - 1) {
      if (!((rows[std::countr_zero(nb)] >> u) & 1U)) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
    g.rows_[u] = rows[u];
  }
  return g;
}

Graph graph_from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool bitstring_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (int j = 1; j < a.order(); ++j) {
    // Column j holds x_{0j}, x_{1j}, ..., x_{j-1,j}; x_{0j} is read first.
    const Row ca = a.neighbors(j) & ((Row{1} << j) - 1);
    const Row cb = b.neighbors(j) & ((Row{1} << j) - 1);
    if (ca != cb) {
      const Row lowest_difference = (ca ^ cb) & -(ca ^ cb);
      return (cb & lowest_difference) != 0;
    }
  }
  return false;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  Row seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || ((seen >> p) & 1U)) {
      throw std::invalid_argument("not a permutation");
    }
    seen |= Row{1} << p;
  }
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (Row nb = g.neighbors(u) & ((Row{1} << u) - 1); nb; nb &= nb - 1) {
      out.add_edge(perm[u], perm[std::countr_zero(nb)]);
    }
  }
  return out;
}

Graph delete_vertex(const Graph& g, VertexId v) {
  check_vertex(g, v);
  std::array<Row, kMaxOrder> rows{};
  int k = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (u == v.index) continue;
    rows[k++] = drop_bit(g.neighbors(u), v.index);
  }
  return graph_from_rows(std::span<const Row>(rows.data(), static_cast<std::size_t>(k)));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > kMaxOrder) {
    throw std::invalid_argument("disjoint union exceeds order " + std::to_string(kMaxOrder));
  }
  std::array<Row, kMaxOrder> rows{};
  for (int u = 0; u < g.order(); ++u) rows[u] = g.neighbors(u);
  for (int u = 0; u < h.order(); ++u) rows[g.order() + u] = h.neighbors(u) << g.order();
  return graph_from_rows(
      std::span<const Row>(rows.data(), static_cast<std::size_t>(g.order() + h.order())));
}

Graph complement(const Graph& g) {
  std::array<Row, kMaxOrder> rows{};
  for (int u = 0; u < g.order(); ++u) rows[u] = ~g.neighbors(u) & g.vertex_mask() & ~(Row{1} << u);
  return graph_from_rows(std::span<const Row>(rows.data(), static_cast<std::size_t>(g.order())));
}

int degree(const Graph& g, VertexId v) {
  check_vertex(g, v);
  return g.degree(v.index);
}

namespace {

Row component_of(const Graph& g, int v) {
  Row reached = Row{1} << v;
  Row frontier = reached;
  while (frontier) {
    Row next = 0;
    for (Row f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> parts;
  Row unvisited = g.vertex_mask();
  while (unvisited) {
    const Row comp = component_of(g, std::countr_zero(unvisited));
    unvisited &= ~comp;
    auto& part = parts.emplace_back();
    for (Row c = comp; c; c &= c - 1) part.push_back(std::countr_zero(c));
  }
  return parts;
}

bool is_connected(const Graph& g) {
  return g.order() == 0 || component_of(g, 0) == g.vertex_mask();
}

bool is_star_center(const Graph& g, VertexId v) {
  check_vertex(g, v);
  // Star centred at v: every other vertex of the component is a leaf hanging off v.
  const Row comp = component_of(g, v.index);
  const Row leaves = comp & ~(Row{1} << v.index);
  if (g.neighbors(v.index) != leaves) return false;
  for (Row l = leaves; l; l &= l - 1) {
    if (g.degree(std::countr_zero(l)) != 1) return false;
  }
  return true;
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ULL;
  for (Row r : g.rows()) {
    h ^= std::hash<Row>{}(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lenergy
