#ifndef LENERGY_ENUMERATION_HPP
#define LENERGY_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "lenergy/graph.hpp"
#include "lenergy/parallel.hpp"

namespace lenergy {

/// Orders up to this bound are validated against oracles; larger ones need
/// GenerationTask::best_effort.
inline constexpr int kCertifiedMaxOrder = 10;

struct Shard {
  int index = 0;
  int total = 1;
};

struct GenerationTask {
  int order = 1;
  bool connected_only = false;
  std::optional<Shard> shard;
  bool best_effort = false;
};

/// Throws std::invalid_argument for order < 1, an invalid shard, or an order
/// above kCertifiedMaxOrder without best_effort.
void validate(const GenerationTask& task);

/// All isomorphism classes whose canonical augmentation parent is `parent`
/// (which must be canonical), each in canonical form, sorted by graph6 bit
/// string. A child is accepted when its canonical deletion vertex (the vertex
/// placed last by canonical_labeling) leaves a graph isomorphic to `parent`.
std::vector<Graph> canonical_children(const Graph& parent);

/// Canonical graphs of the given order in depth-first augmentation order,
/// rooted at the null graph.
std::vector<Graph> augmentation_level(int order);

/// Parents (order task.order - 1) owned by the task's shard. Shard i of t owns
/// every parent whose position in augmentation order is congruent to i mod t.
std::vector<Graph> shard_parents(const GenerationTask& task);

/// Generates one canonical representative per isomorphism class of the
/// task's order and maps each through `map` on `threads` workers; results
/// reach `sink` in the deterministic augmentation order.
template <typename Map, typename Sink>
void generate_mapped(const GenerationTask& task, int threads, Map&& map, Sink&& sink) {
  validate(task);
  const std::vector<Graph> parents = shard_parents(task);
  using Out = std::decay_t<std::invoke_result_t<Map&, const Graph&>>;
  ordered_parallel_map(
      parents, threads,
      [&](const Graph& parent) {
        std::vector<Out> mapped;
        for (const Graph& child : canonical_children(parent)) {
          if (task.connected_only && !is_connected(child)) continue;
          mapped.push_back(map(child));
        }
        return mapped;
      },
      [&](std::vector<Out>&& batch) {
        for (Out& item : batch) sink(std::move(item));
      });
}

void generate(const GenerationTask& task, const std::function<void(const Graph&)>& sink,
              int threads = 1);

std::vector<Graph> generate_all(const GenerationTask& task, int threads = 1);

/// Writes one graph6 line per generated graph and returns the count. Throws
/// std::ios_base::failure if the stream goes bad.
std::size_t stream_graph6(const GenerationTask& task, std::ostream& out, int threads = 1);

}  // namespace lenergy

#endif  // LENERGY_ENUMERATION_HPP
