#include "lenergy/family.hpp"

#include <array>
#include <cctype>
#include <map>

#include "lenergy/canonical.hpp"

#include "lenergy/graph6.hpp"

namespace lenergy {

namespace {

void require_range(int value, int low, int high, const char* what) {
  if (value < low || value > high) {
    throw std::invalid_argument(std::string(what) + " parameter " + std::to_string(value) +
                                " outside " + std::to_string(low) + ".." + std::to_string(high));
  }
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph build_family(const GraphFamily& family) {
  switch (family.kind) {
    case FamilyKind::Complete:
      require_range(family.p, 1, kMaxOrder, "complete graph");
      return complete_graph(family.p);
    case FamilyKind::Cycle: {
      require_range(family.p, 3, kMaxOrder, "cycle");
      Graph g(family.p);
      for (int v = 0; v < family.p; ++v) g.add_edge(v, (v + 1) % family.p);
      return g;
    }
    case FamilyKind::Path: {
      require_range(family.p, 1, kMaxOrder, "path");
      Graph g(family.p);
      for (int v = 0; v + 1 < family.p; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case FamilyKind::Star: {
      require_range(family.p, 1, kMaxOrder, "star");
      Graph g(family.p);
      for (int v = 1; v < family.p; ++v) g.add_edge(0, v);
      return g;
    }
    case FamilyKind::CompleteBipartite: {
      require_range(family.p, 1, kMaxOrder, "complete bipartite");
      require_range(family.q, 1, kMaxOrder - family.p, "complete bipartite");
      Graph g(family.p + family.q);
      for (int u = 0; u < family.p; ++u)
        for (int v = family.p; v < family.p + family.q; ++v) g.add_edge(u, v);
      return g;
    }
    case FamilyKind::Diamond: {
      Graph g = complete_graph(4);
      g.remove_edge(2, 3);
      return g;
    }
    case FamilyKind::Paw: {
      Graph g = complete_graph(3);
      g.add_vertex();
      g.add_edge(2, 3);
      return g;
    }
    case FamilyKind::Null:
      return Graph{};
    case FamilyKind::Singleton:
      return Graph(1);
  }
  throw std::invalid_argument("unknown graph family");
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Graph parse() {
    skip_space();
    if (at_end()) throw ParseError("empty family expression", pos_);
    Graph result = term();
    skip_space();
    while (!at_end()) {
      if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      Graph next = term();
      if (result.order() + next.order() > kMaxOrder) {
        throw ParseError("expression exceeds order " + std::to_string(kMaxOrder), start);
      }
      result = disjoint_union(result, next);
      skip_space();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool digit_next() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  int number() {
    const std::size_t start = pos_;
    if (!digit_next()) throw ParseError("expected a number", pos_);
    long value = 0;
    while (digit_next()) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) throw ParseError("number too large", start);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  Graph term() {
    const std::size_t start = pos_;
    int copies = 1;
    if (digit_next()) {
      copies = number();
      if (copies < 1) throw ParseError("multiplicity must be positive", start);
    }
    const Graph unit = family_term();
    if (static_cast<long>(copies) * unit.order() > kMaxOrder) {
      throw ParseError("expression exceeds order " + std::to_string(kMaxOrder), start);
    }
    Graph out;
    for (int c = 0; c < copies; ++c) out = disjoint_union(out, unit);
    return out;
  }

  Graph family_term() {
    const std::size_t start = pos_;
    if (consume_word("Diamond")) return build_family(GraphFamily::diamond());
    if (consume_word("Paw")) return build_family(GraphFamily::paw());
    if (consume_word("Null")) return build_family(GraphFamily::null());
    if (at_end()) throw ParseError("expected a graph family", pos_);

    const char letter = text_[pos_++];
    if (letter != 'K' && letter != 'C' && letter != 'P' && letter != 'S') {
      throw ParseError(std::string("unknown graph family '") + letter + "'", start);
    }
    const std::size_t number_at = pos_;
    const int n = number();
    try {
      if (letter == 'K' && !at_end() && text_[pos_] == ',') {
        ++pos_;
        const int q = number();
        return build_family(GraphFamily::complete_bipartite(n, q));
      }
      if (!at_end() && text_[pos_] == '\'') {
        ++pos_;
        if (letter == 'C' && n == 4) return build_family(GraphFamily::diamond());
        if (letter == 'P' && n == 4) return build_family(GraphFamily::paw());
        throw ParseError("only C4' and P4' carry a prime", start);
      }
      switch (letter) {
        case 'K': return build_family(GraphFamily::complete(n));
        case 'C': return build_family(GraphFamily::cycle(n));
        case 'P': return build_family(GraphFamily::path(n));
        default: return build_family(GraphFamily::star(n));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), number_at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_family_expression(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace lenergy

namespace lenergy {

namespace {

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  std::array<int, kMaxOrder> index{};
  for (std::size_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = static_cast<int>(k);
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (Row nb = g.neighbors(vertices[k]); nb; nb &= nb - 1) {
      const int j = index[std::countr_zero(nb)];
      if (j > static_cast<int>(k)) out.add_edge(static_cast<int>(k), j);
    }
  }
  return out;
}

std::string component_name(const Graph& c) {
  const int k = c.order();
  const int m = c.edge_count();
  int max_degree = 0;
  bool two_regular = true;
  for (int v = 0; v < k; ++v) {
    max_degree = std::max(max_degree, c.degree(v));
    two_regular = two_regular && c.degree(v) == 2;
  }
  const std::string size = std::to_string(k);
  if (m == k * (k - 1) / 2) return "K" + size;
  if (two_regular) return "C" + size;
  if (m == k - 1 && max_degree <= 2) return "P" + size;
  if (m == k - 1 && max_degree == k - 1) return "S" + size;
  if (k == 4) {
    const Graph canon = canonical_form(c);
    if (canon == canonical_form(build_family(GraphFamily::diamond()))) return "C4'";
    if (canon == canonical_form(build_family(GraphFamily::paw()))) return "P4'";
  }
  return "G(" + encode_graph6(canonical_form(c)) + ")";
}

}  // namespace

std::string describe_graph(const Graph& g) {
  if (g.order() == 0) return "Null";
  // (size, name) -> multiplicity, largest components first.
  std::map<std::pair<int, std::string>, int, std::greater<>> counts;
  for (const auto& part : connected_components(g)) {
    const Graph c = induced(g, part);
    ++counts[{c.order(), component_name(c)}];
  }
  std::string out;
  for (const auto& [key, count] : counts) {
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += key.second;
  }
  return out;
}

}  // namespace lenergy
