#include "lenergy/enumeration.hpp"

#include <algorithm>
#include <string>

#include "lenergy/canonical.hpp"
#include "lenergy/graph6.hpp"

namespace lenergy {

void validate(const GenerationTask& task) {
  if (task.order < 1) throw std::invalid_argument("generation order must be at least 1");
  if (task.order > kMaxOrder) {
    throw std::invalid_argument("generation order exceeds " + std::to_string(kMaxOrder));
  }
  if (task.order > kCertifiedMaxOrder && !task.best_effort) {
    throw std::invalid_argument("orders above " + std::to_string(kCertifiedMaxOrder) +
                                " require best-effort mode");
  }
  if (task.shard) {
    const Shard& s = *task.shard;
    if (s.total < 1 || s.index < 0 || s.index >= s.total) {
      throw std::invalid_argument("shard index must lie in 0..total-1");
    }
  }
}

std::vector<Graph> canonical_children(const Graph& parent) {
  const int m = parent.order();
  if (m >= kMaxOrder) throw std::invalid_argument("parent already has the maximum order");
  std::vector<Graph> children;

  Graph extended = parent;
  const int fresh = extended.add_vertex();
  const Row subsets = Row{1} << m;
  for (Row s = 0; s < subsets; ++s) {
    Graph candidate = extended;
    for (Row bits = s; bits; bits &= bits - 1) candidate.add_edge(fresh, std::countr_zero(bits));

    Graph canon = canonical_form(candidate);
    // The deleted vertex must have degree |S| for the remainder to match the parent.
    if (canon.degree(m) != std::popcount(s)) continue;
    const Graph remainder = delete_vertex(canon, VertexId{m});
    if (remainder != parent && canonical_form(remainder) != parent) continue;
    children.push_back(canon);
  }

  std::sort(children.begin(), children.end(), bitstring_less);
  children.erase(std::unique(children.begin(), children.end()), children.end());
  return children;
}

namespace {

void collect_level(const Graph& g, int order, std::vector<Graph>& out) {
  if (g.order() == order) {
    out.push_back(g);
    return;
  }
  for (const Graph& child : canonical_children(g)) collect_level(child, order, out);
}

}  // namespace

std::vector<Graph> augmentation_level(int order) {
  if (order < 0 || order > kMaxOrder) throw std::invalid_argument("order out of range");
  std::vector<Graph> out;
  collect_level(Graph{}, order, out);
  return out;
}

std::vector<Graph> shard_parents(const GenerationTask& task) {
  validate(task);
  std::vector<Graph> parents = augmentation_level(task.order - 1);
  if (!task.shard || task.shard->total == 1) return parents;
  std::vector<Graph> owned;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (static_cast<int>(i % task.shard->total) == task.shard->index) owned.push_back(parents[i]);
  }
  return owned;
}

void generate(const GenerationTask& task, const std::function<void(const Graph&)>& sink,
              int threads) {
  generate_mapped(
      task, threads, [](const Graph& g) { return g; }, [&](Graph&& g) { sink(g); });
}

std::vector<Graph> generate_all(const GenerationTask& task, int threads) {
  std::vector<Graph> out;
  generate(task, [&](const Graph& g) { out.push_back(g); }, threads);
  return out;
}

std::size_t stream_graph6(const GenerationTask& task, std::ostream& out, int threads) {
  const auto old_mask = out.exceptions();
  out.exceptions(std::ios::badbit | std::ios::failbit);
  std::size_t count = 0;
  try {
    generate_mapped(
        task, threads, [](const Graph& g) { return encode_graph6(g); },
        [&](std::string&& line) {
          out << line << '\n';
          ++count;
        });
  } catch (...) {
    out.exceptions(old_mask);
    throw;
  }
  out.exceptions(old_mask);
  return count;
}

}  // namespace lenergy
