#ifndef LENERGY_SPECTRAL_HPP
#define LENERGY_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lenergy/graph.hpp"

namespace lenergy {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
constexpr Scalar default_off_diagonal_tolerance() {
  if constexpr (sizeof(Scalar) > sizeof(double)) {
    return Scalar(1e-17L);
  } else {
    return Scalar(1e-14);
  }
}

template <typename Scalar>
struct JacobiSettings {
  /// Sweeps stop once the Frobenius norm of the off-diagonal part drops below this.
  Scalar off_diagonal_tolerance = default_off_diagonal_tolerance<Scalar>();
  int max_sweeps = 100;
};

template <typename Scalar = double>
Matrix<Scalar> adjacency_matrix(const Graph& g) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u)
    for (Row nb = g.neighbors(u); nb; nb &= nb - 1) a(u, std::countr_zero(nb)) = Scalar(1);
  return a;
}

/// Eigenvalues of a real symmetric matrix in descending order, by cyclic
/// Jacobi rotations. Only the symmetric part of `a` is meaningful.
template <typename Derived>
Vector<typename Derived::Scalar> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& a,
    const JacobiSettings<typename Derived::Scalar>& settings = {}) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  if (a.rows() != a.cols()) throw std::invalid_argument("jacobi_eigenvalues needs a square matrix");

  Matrix<Scalar> m = a;
  const Eigen::Index n = m.rows();
  const Scalar tol_sq = settings.off_diagonal_tolerance * settings.off_diagonal_tolerance;

  bool converged = false;
  for (int sweep = 0; sweep <= settings.max_sweeps; ++sweep) {
    Scalar off = 0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off += 2 * m(p, q) * m(p, q);
    if (off < tol_sq) {
      converged = true;
      break;
    }
    if (sweep == settings.max_sweeps) break;

    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = m(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (m(q, q) - m(p, p)) / (2 * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + 1));
        const Scalar c = 1 / sqrt(t * t + 1);
        const Scalar s = t * c;
        m(p, p) -= t * apq;
        m(q, q) += t * apq;
        m(p, q) = m(q, p) = Scalar(0);
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar arp = m(r, p);
          const Scalar arq = m(r, q);
          m(r, p) = m(p, r) = c * arp - s * arq;
          m(r, q) = m(q, r) = s * arp + c * arq;
        }
      }
    }
  }
  if (!converged) throw std::runtime_error("Jacobi iteration did not converge");

  Vector<Scalar> values = m.diagonal();
  std::sort(values.begin(), values.end(), std::greater<Scalar>());
  return values;
}

/// Adjacency eigenvalues, descending.
template <typename Scalar = double>
Vector<Scalar> graph_eigenvalues(const Graph& g, const JacobiSettings<Scalar>& settings = {}) {
  return jacobi_eigenvalues(adjacency_matrix<Scalar>(g), settings);
}

/// Adjacency spectrum of a graph, eigenvalues in descending order.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  int edge_count = 0;
};

Spectrum spectrum(const Graph& g);

class SpectrumSanityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The adjacency matrix has zero trace and squared Frobenius norm 2|E|.
/// Throws SpectrumSanityError if either identity is off by more than its
/// tolerance (1e-10 for the trace, 1e-9 for the sum of squares).
template <typename Scalar>
void check_spectrum_sanity(const Vector<Scalar>& eigenvalues, int edge_count) {
  using std::abs;
  const Scalar trace = eigenvalues.sum();
  const Scalar squares = eigenvalues.squaredNorm();
  if (abs(trace) > Scalar(1e-10)) {
    throw SpectrumSanityError("eigenvalue sum " + std::to_string(static_cast<double>(trace)) +
                              " is not zero");
  }
  if (abs(squares - Scalar(2 * edge_count)) > Scalar(1e-9)) {
    throw SpectrumSanityError("sum of squared eigenvalues " +
                              std::to_string(static_cast<double>(squares)) + " differs from " +
                              std::to_string(2 * edge_count));
  }
}

inline void check_spectrum_sanity(const Spectrum& s) {
  check_spectrum_sanity<double>(s.eigenvalues, s.edge_count);
}

/// Energies of vertex-deleted subgraphs keyed by canonical form. Concurrent
/// inserts of the same key store identical values, so last write wins.
class SubgraphEnergyCache {
 public:
  SubgraphEnergyCache();
  ~SubgraphEnergyCache();
  SubgraphEnergyCache(const SubgraphEnergyCache&) = delete;
  SubgraphEnergyCache& operator=(const SubgraphEnergyCache&) = delete;

  std::optional<double> find(const Graph& canonical) const;
  void insert(const Graph& canonical, double energy);
  std::size_t size() const;

 private:
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<Graph, double, GraphHash> energies;
  };
  static constexpr std::size_t kShards = 32;
  Shard& shard_for(const Graph& g) const;
  std::unique_ptr<std::array<Shard, kShards>> shards_;
};

struct SpectralOptions {
  /// Run check_spectrum_sanity after every eigensolve.
  bool check_sanity = false;
  /// Optional cache for E(G - v); used by the double-precision path only.
  SubgraphEnergyCache* cache = nullptr;
};

/// E(G): sum of absolute eigenvalues. Zero for the null graph and for
/// edgeless graphs.
template <typename Scalar = double>
Scalar graph_energy(const Graph& g, const SpectralOptions& options = {},
                    const JacobiSettings<Scalar>& settings = {}) {
  if (g.edge_count() == 0) return Scalar(0);
  const Vector<Scalar> values = graph_eigenvalues<Scalar>(g, settings);
  if (options.check_sanity) check_spectrum_sanity<Scalar>(values, g.edge_count());
  return values.cwiseAbs().sum();
}

template <typename Scalar>
struct BasicLocalEnergyProfile {
  /// per_vertex[j] = E(G) - E(G - v_j).
  std::vector<Scalar> per_vertex;
  Scalar total = 0;
};

using LocalEnergyProfile = BasicLocalEnergyProfile<double>;

namespace detail {
double cached_subgraph_energy(const Graph& subgraph, const SpectralOptions& options);
}

/// Local energies at every vertex and their sum e(G); E(G) is computed once
/// and E(G - v) once per vertex.
template <typename Scalar = double>
BasicLocalEnergyProfile<Scalar> local_energy_profile(const Graph& g,
                                                     const SpectralOptions& options = {},
                                                     const JacobiSettings<Scalar>& settings = {}) {
  BasicLocalEnergyProfile<Scalar> profile;
  profile.per_vertex.resize(g.order());
  if (g.order() == 0) return profile;
  const Scalar whole = graph_energy<Scalar>(g, options, settings);
  for (int v = 0; v < g.order(); ++v) {
    const Graph sub = delete_vertex(g, VertexId{v});
    Scalar part;
    if constexpr (std::is_same_v<Scalar, double>) {
      part = options.cache ? detail::cached_subgraph_energy(sub, options)
                           : graph_energy<Scalar>(sub, options, settings);
    } else {
      part = graph_energy<Scalar>(sub, options, settings);
    }
    profile.per_vertex[v] = whole - part;
    profile.total += profile.per_vertex[v];
  }
  return profile;
}

/// E_G(v) = E(G) - E(G - v).
double local_energy_at(const Graph& g, VertexId v, const SpectralOptions& options = {});

/// e(G) in double precision.
double local_energy(const Graph& g, const SpectralOptions& options = {});

}  // namespace lenergy

#endif  // LENERGY_SPECTRAL_HPP
