#ifndef LENERGY_VERIFICATION_HPP
#define LENERGY_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lenergy/equienergy.hpp"

namespace lenergy {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Passing check whose detail records a known error in published values.
  bool documented_discrepancy = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int max_order = 9;
  Tolerances tolerances;
  int threads = 1;
  /// Compare against the published class lists with fixture_errata() applied.
  bool apply_errata = false;
  std::uint64_t seed = 20241015;
};

/// Orders 4-8 against the published class lists; zero near misses required.
std::vector<CheckResult> verify_propositions(const VerifyOptions& options);

/// Connected-only classification for every order up to options.max_order.
std::vector<CheckResult> verify_corollary(const VerifyOptions& options);

/// Union additivity, isolated-vertex neutrality, complete-graph
/// decompositions, closure of forced classes, and the 2 sqrt(d) bound with
/// its star-centre equality case.
std::vector<CheckResult> verify_theorems(const VerifyOptions& options);

/// Closed forms for K_n, C_n, K_{p,q} against eigenvalue computation.
std::vector<CheckResult> verify_formulas(const VerifyOptions& options);

/// Random G(n, 1/2) graph with n uniform in [min_order, max_order].
template <typename Rng>
Graph random_graph(Rng& rng, int min_order, int max_order) {
  const int span = max_order - min_order + 1;
  const int n = min_order + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1U) g.add_edge(u, v);
  return g;
}

}  // namespace lenergy

#endif  // LENERGY_VERIFICATION_HPP
