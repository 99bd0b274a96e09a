// Independent reference computations for the tests. Nothing here calls the
// library's canonical labelling, generator or Jacobi solver.
#ifndef LENERGY_TESTS_ORACLES_HPP
#define LENERGY_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lenergy/graph.hpp"

namespace oracle {

using AdjList = std::vector<std::vector<int>>;

inline AdjList dense(const lenergy::Graph& g) {
  AdjList a(g.order(), std::vector<int>(g.order(), 0));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
  return a;
}

/// Upper triangle read column by column, as '0'/'1' characters.
inline std::string upper_bits(const AdjList& a, const std::vector<int>& perm) {
  const int n = static_cast<int>(a.size());
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::string s;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) s.push_back(a[inv[i]][inv[j]] ? '1' : '0');
  return s;
}

/// Smallest upper-triangle string over all n! labellings.
inline std::string min_certificate(const lenergy::Graph& g) {
  const AdjList a = dense(g);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = upper_bits(a, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, upper_bits(a, perm));
  return std::to_string(g.order()) + ":" + best;
}

/// One certificate per isomorphism class of order n, by exhausting all
/// labelled graphs. Practical for n <= 6.
inline std::set<std::string> brute_force_classes(int n, bool connected_only = false) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::string> out;
  const unsigned long total = 1UL << pairs.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    lenergy::Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1UL) g.add_edge(pairs[k].first, pairs[k].second);
    if (connected_only) {
      std::vector<int> stack{0};
      std::vector<bool> seen(n, false);
      int reached = 0;
      if (n > 0) seen[0] = true;
      while (n > 0 && !stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int v = 0; v < n; ++v)
          if (g.adjacent(u, v) && !seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
      }
      if (reached != n) continue;
    }
    out.insert(min_certificate(g));
  }
  return out;
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues(const lenergy::Graph& g) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) a(u, v) = g.adjacent(u, v) ? Scalar(1) : Scalar(0);
  if (g.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<decltype(a)> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

template <typename Scalar = double>
Scalar energy(const lenergy::Graph& g) {
  if (g.order() == 0) return Scalar(0);
  return eigenvalues<Scalar>(g).cwiseAbs().sum();
}

/// Induced subgraph without v, rebuilt by hand.
inline lenergy::Graph without(const lenergy::Graph& g, int v) {
  lenergy::Graph h(g.order() - 1);
  for (int a = 0, i = 0; a < g.order(); ++a) {
    if (a == v) continue;
    for (int b = a + 1, j = i + 1; b < g.order(); ++b) {
      if (b == v) continue;
      if (g.adjacent(a, b)) h.add_edge(i, j);
      ++j;
    }
    ++i;
  }
  return h;
}

template <typename Scalar = double>
Scalar vertex_local_energy(const lenergy::Graph& g, int v) {
  return energy<Scalar>(g) - energy<Scalar>(without(g, v));
}

template <typename Scalar = double>
Scalar local_energy(const lenergy::Graph& g) {
  Scalar sum = 0;
  for (int v = 0; v < g.order(); ++v) sum += vertex_local_energy<Scalar>(g, v);
  return sum;
}

// Textbook spectra.
inline double cycle_energy(int n) {
  double s = 0;
  for (int j = 0; j < n; ++j) s += std::fabs(2 * std::cos(2 * std::numbers::pi * j / n));
  return s;
}

inline double path_energy(int n) {
  double s = 0;
  for (int j = 1; j <= n; ++j) s += std::fabs(2 * std::cos(std::numbers::pi * j / (n + 1)));
  return s;
}

/// e(C_n): every vertex deletion leaves P_{n-1}.
inline double cycle_local_energy(int n) { return n * (cycle_energy(n) - path_energy(n - 1)); }

/// E(K_{p,q}) = 2 sqrt(pq); deleting a p-side vertex leaves K_{p-1,q}.
inline double bipartite_local_energy(int p, int q) {
  const auto e = [](int a, int b) { return 2 * std::sqrt(double(a) * b); };
  return p * (e(p, q) - e(p - 1, q)) + q * (e(p, q) - e(p, q - 1));
}

}  // namespace oracle

#endif  // LENERGY_TESTS_ORACLES_HPP
