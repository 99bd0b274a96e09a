#include "lenergy/spectral.hpp"

#include "lenergy/canonical.hpp"

namespace lenergy {

Spectrum spectrum(const Graph& g) {
  return Spectrum{graph_eigenvalues<double>(g), g.edge_count()};
}

double local_energy_at(const Graph& g, VertexId v, const SpectralOptions& options) {
  const Graph sub = delete_vertex(g, v);
  const double part = options.cache ? detail::cached_subgraph_energy(sub, options)
                                    : graph_energy<double>(sub, options);
  return graph_energy<double>(g, options) - part;
}

double local_energy(const Graph& g, const SpectralOptions& options) {
  return local_energy_profile<double>(g, options).total;
}

SubgraphEnergyCache::SubgraphEnergyCache() : shards_(std::make_unique<std::array<Shard, kShards>>()) {}

SubgraphEnergyCache::~SubgraphEnergyCache() = default;

SubgraphEnergyCache::Shard& SubgraphEnergyCache::shard_for(const Graph& g) const {
  return (*shards_)[GraphHash{}(g) % kShards];
}

std::optional<double> SubgraphEnergyCache::find(const Graph& canonical) const {
  Shard& shard = shard_for(canonical);
  std::lock_guard lock(shard.mutex);
  const auto it = shard.energies.find(canonical);
  if (it == shard.energies.end()) return std::nullopt;
  return it->second;
}

void SubgraphEnergyCache::insert(const Graph& canonical, double energy) {
  Shard& shard = shard_for(canonical);
  std::lock_guard lock(shard.mutex);
  shard.energies.insert_or_assign(canonical, energy);
}

std::size_t SubgraphEnergyCache::size() const {
  std::size_t total = 0;
  for (const Shard& shard : *shards_) {
    std::lock_guard lock(shard.mutex);
    total += shard.energies.size();
  }
  return total;
}

namespace detail {

double cached_subgraph_energy(const Graph& subgraph, const SpectralOptions& options) {
  const Graph key = canonical_form(subgraph);
  if (const auto hit = options.cache->find(key)) return *hit;
  const double energy = graph_energy<double>(key, options);
  options.cache->insert(key, energy);
  return energy;
}

}  // namespace detail

}  // namespace lenergy
