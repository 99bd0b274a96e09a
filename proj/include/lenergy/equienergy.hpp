#ifndef LENERGY_EQUIENERGY_HPP
#define LENERGY_EQUIENERGY_HPP

#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lenergy/enumeration.hpp"
#include "lenergy/graph.hpp"
#include "lenergy/spectral.hpp"

namespace lenergy {

/// Two-stage equality test on e(G): values closer than `bucket` are
/// candidates, candidates are re-evaluated in extended precision and accepted
/// as equal below `confirm`. Anything in between is a near miss.
///
/// Defaults sit well above the observed rounding noise (double stage 4e-14,
/// extended stage 2e-17 for n <= 9) and below the smallest gap between
/// distinct values at order 9 (1.9e-10).
struct Tolerances {
  double bucket = 1e-11;
  double confirm = 1e-14;
};

/// The looser pair (1e-6, 1e-9); merges distinct values at order 9.
inline constexpr Tolerances kLooseTolerances{1e-6, 1e-9};

struct EquienergeticClass {
  int order = 0;
  double energy = 0;
  /// Canonical graph6 strings, sorted.
  std::vector<std::string> members;
  /// Largest pairwise difference of the extended-precision values.
  double spread = 0;
};

struct NearMiss {
  std::string first;
  std::string second;
  double difference = 0;
};

struct ClassificationReport {
  int order = 0;
  bool connected_only = false;
  std::size_t total_graphs = 0;
  Tolerances tolerances;
  /// Ordered by energy.
  std::vector<EquienergeticClass> classes;
  std::vector<NearMiss> near_misses;
  /// Smallest E_G(v) over all vertices of all classified graphs.
  double min_vertex_local_energy = 0;
  /// Wall-clock time; not part of serialized output.
  double seconds = 0;
};

/// Per-graph data the classifier keeps: e(G), the smallest E_G(v), and the
/// canonical graph6 string.
struct EnergyRecord {
  double energy = 0;
  double min_vertex = 0;
  std::string graph6;
};

/// `g` must already be canonical.
EnergyRecord make_energy_record(const Graph& g, const SpectralOptions& options = {});

/// Extended-precision e(G) used by the confirmation stage.
long double precise_local_energy(const Graph& g);

class Classifier {
 public:
  Classifier(int order, Tolerances tolerances, bool connected_only = false);

  /// Accepts any labelling; the graph is canonicalised first.
  void add(const Graph& g);
  /// Accepts a precomputed record for a canonical graph of the right order.
  void add(EnergyRecord record);

  /// Throws std::invalid_argument if two inputs are isomorphic.
  ClassificationReport finish() { return report_with(tolerances_); }

  /// Classifies the records gathered so far under other tolerances.
  ClassificationReport report_with(Tolerances tolerances);

  std::size_t size() const { return records_.size(); }

 private:
  void sort_records();

  int order_;
  Tolerances tolerances_;
  bool connected_only_;
  bool sorted_ = false;
  std::vector<EnergyRecord> records_;
};

/// Throws std::invalid_argument on mixed orders or repeated isomorphism classes.
ClassificationReport classify(std::span<const Graph> graphs, int order, Tolerances tolerances,
                              bool connected_only = false);

/// Generates the task's graphs, computes e(G) on `threads` workers, classifies.
ClassificationReport classify_generated(const GenerationTask& task, Tolerances tolerances,
                                        int threads = 1, const SpectralOptions& options = {});

/// A class as a set of canonical graph6 strings.
using ClassSet = std::set<std::set<std::string>>;

ClassSet class_set(const ClassificationReport& report);

/// Class lists as published for orders 4 to 8, written as family expressions.
struct PublishedFixture {
  int order = 0;
  std::vector<std::vector<std::string>> expected_classes;
};

/// Verbatim lists.
const std::vector<PublishedFixture>& published_fixtures();

/// A member missing from a published class although it is forced into it by
/// additivity over disjoint unions.
struct FixtureErratum {
  int order = 0;
  std::string class_representative;
  std::string missing_member;
  std::string reason;
};

const std::vector<FixtureErratum>& fixture_errata();

/// The published fixture with every erratum for its order applied.
PublishedFixture corrected_fixture(const PublishedFixture& fixture);

/// Resolves every expression to a canonical graph6 string. Throws ParseError
/// for a bad expression and std::invalid_argument for a wrong order.
ClassSet resolve_fixture(const PublishedFixture& fixture);

struct FixtureVerdict {
  bool pass = false;
  std::vector<std::string> diff;
};

FixtureVerdict compare_classes(const ClassSet& expected, const ClassificationReport& report);
FixtureVerdict verify_fixture(const PublishedFixture& fixture, const ClassificationReport& report);

/// Fixture files: graph6 lines, classes separated by blank lines, lines
/// starting with '#' are comments.
void write_fixture(const ClassificationReport& report, std::ostream& out,
                   const std::string& provenance);
ClassSet read_fixture(std::istream& in);

struct CorollaryVerdict {
  int order = 0;
  bool pass = false;
  std::string detail;
  ClassificationReport report;
};

/// Expected connected-only result for one order: no class, except {K_n, C_n}
/// for odd n >= 5.
ClassSet expected_connected_classes(int order);

std::vector<CorollaryVerdict> verify_connected_corollary(int max_order, Tolerances tolerances = {},
                                                         int threads = 1);

CorollaryVerdict judge_connected_report(const ClassificationReport& report);

/// True iff |e(K_n) - e(K_{n1} + ... + K_{nk})| < 1e-8. Throws
/// std::invalid_argument unless the parts are positive and sum to n.
bool verify_kn_decomposition(int n, std::span<const int> parts);

/// Partitions of n with parts in non-increasing order.
std::vector<std::vector<int>> integer_partitions(int n);

/// Classes forced by unions of complete graphs plus isolated vertices: all
/// such graphs of the given order whose non-trivial parts have the same total
/// share e = 2 * total. Only groups with two or more members are returned.
ClassSet predicted_complete_union_classes(int order);

/// Every predicted class must sit inside one reported class.
FixtureVerdict verify_complete_union_closure(const ClassificationReport& report);

}  // namespace lenergy

#endif  // LENERGY_EQUIENERGY_HPP
