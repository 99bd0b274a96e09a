// Acceptance suite: one PASS/FAIL line per criterion, indented detail lines
// below each. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lenergy/canonical.hpp"
#include "lenergy/closed_forms.hpp"
#include "lenergy/enumeration.hpp"
#include "lenergy/equienergy.hpp"
#include "lenergy/family.hpp"
#include "lenergy/graph6.hpp"
#include "lenergy/spectral.hpp"
#include "lenergy/verification.hpp"
#include "support/oracles.hpp"

using namespace lenergy;

namespace {

// Pinned tolerances.
constexpr Tolerances kFixtureTolerances{1e-6, 1e-9};
constexpr double kFixtureSeconds = 60;
constexpr double kCorollarySeconds = 600;
constexpr double kClosedFormTolerance = 1e-8;
constexpr double kEvenCycleGap = 1.0;
constexpr double kAdditivityTolerance = 1e-8;
constexpr double kNeutralityTolerance = 1e-8;
constexpr double kBoundSlack = 1e-9;
constexpr double kTightTolerance = 1e-7;
constexpr double kDecompositionTolerance = 1e-8;

const SpectralOptions kChecked{true, nullptr};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void info(const std::string& what) { notes.push_back("info  " + what); }

  void print() const {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "\n";
    for (const auto& n : notes) std::cout << "        " << n << "\n";
    std::cout.flush();
  }
};

Classifier collect(int order, bool connected, int threads) {
  Classifier classifier(order, {}, connected);
  GenerationTask task;
  task.order = order;
  task.connected_only = connected;
  task.best_effort = order > kCertifiedMaxOrder;
  generate_mapped(
      task, threads, [](const Graph& g) { return make_energy_record(g, kChecked); },
      [&](EnergyRecord&& r) { classifier.add(std::move(r)); });
  return classifier;
}

Criterion fixtures(int threads) {
  Criterion c{1, "class lists for orders 4-8 at (1e-6, 1e-9), zero near misses"};
  const auto start = Clock::now();
  std::size_t graphs = 0;
  for (const PublishedFixture& f : published_fixtures()) {
    Classifier classifier = collect(f.order, false, threads);
    graphs += classifier.size();
    const ClassificationReport pinned = classifier.report_with(kFixtureTolerances);
    const FixtureVerdict verdict = verify_fixture(f, pinned);
    std::ostringstream line;
    line << "order " << f.order << ": " << pinned.classes.size() << " classes (expected "
         << f.expected_classes.size() << "), " << pinned.near_misses.size() << " near misses";
    for (const auto& d : verdict.diff) line << "; " << d;
    if (!pinned.near_misses.empty()) {
      double lo = pinned.near_misses.front().difference;
      double hi = lo;
      for (const auto& m : pinned.near_misses) {
        lo = std::min(lo, m.difference);
        hi = std::max(hi, m.difference);
      }
      line << " (gaps " << fmt("%.2g", lo) << " to " << fmt("%.2g", hi) << ")";
    }
    c.require(verdict.pass && pinned.near_misses.empty(), line.str());

    const ClassificationReport tight = classifier.report_with({});
    const FixtureVerdict strict = verify_fixture(f, tight);
    const FixtureVerdict amended = verify_fixture(corrected_fixture(f), tight);
    std::ostringstream alt;
    alt << "order " << f.order << " at default tolerances (1e-11, 1e-14): " << tight.classes.size()
        << " classes, " << tight.near_misses.size() << " near misses, verbatim list "
        << (strict.pass ? "matches" : "differs") << ", amended list "
        << (amended.pass ? "matches" : "differs");
    c.info(alt.str());
  }
  for (const FixtureErratum& e : fixture_errata()) {
    c.info("amendment at order " + std::to_string(e.order) + ": " + e.missing_member + " belongs with " +
           e.class_representative + " (" + e.reason + ")");
  }
  const double seconds = since(start);
  c.require(graphs == 11 + 34 + 156 + 1044 + 12346, std::to_string(graphs) + " graphs classified");
  c.require(seconds < kFixtureSeconds, "runtime " + fmt("%.1f", seconds) + " s (limit 60 s)");
  return c;
}

Criterion corollary(int threads, bool long_run) {
  Criterion c{2, "connected graphs, n <= 9: no class for even n, exactly {K_n, C_n} for odd n >= 5"};
  const auto start = Clock::now();
  const int max_order = long_run ? 10 : 9;
  for (int n = 1; n <= max_order; ++n) {
    const auto t = Clock::now();
    Classifier classifier = collect(n, true, threads);
    const CorollaryVerdict v = judge_connected_report(classifier.report_with({}));
    c.require(v.pass, "n = " + std::to_string(n) + ": " + v.detail + " [" + fmt("%.1f", since(t)) + " s]");
    if (n >= 8) {
      const ClassificationReport loose = classifier.report_with(kFixtureTolerances);
      c.info("n = " + std::to_string(n) + " at (1e-6, 1e-9): " + std::to_string(loose.classes.size()) +
             " classes, " + std::to_string(loose.near_misses.size()) + " near misses");
    }
    if (n == 9) {
      const double seconds = since(start);
      c.require(seconds < kCorollarySeconds,
                "runtime through n = 9: " + fmt("%.1f", seconds) + " s on " +
                    std::to_string(resolve_threads(threads)) + " thread(s) (limit 600 s)");
    }
  }
  if (!long_run) c.info("n = 10 skipped; pass --long-run to include it");
  return c;
}

Criterion generator() {
  Criterion c{3, "generator counts for n = 1..8 and set equality with brute force for n <= 6"};
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    GenerationTask task;
    task.order = n;
    const std::vector<Graph> graphs = generate_all(task);
    std::string line = "n = " + std::to_string(n) + ": " + std::to_string(graphs.size()) + " graphs";
    if (n <= 6) {
      std::set<std::string> mine;
      for (const Graph& g : graphs) mine.insert(oracle::min_certificate(g));
      const bool same = mine.size() == graphs.size() && mine == oracle::brute_force_classes(n);
      c.require(graphs.size() == expected[n - 1] && same, line + (same ? ", equal to brute force" : ", differs from brute force"));
    } else {
      c.require(graphs.size() == expected[n - 1], line);
    }
  }
  return c;
}

Criterion closed_forms() {
  Criterion c{4, "closed forms within 1e-8 of direct computation; even-cycle printed expression adjudicated"};
  double worst = 0;
  for (int n = 2; n <= 10; ++n) {
    worst = std::max(worst, std::fabs(local_energy(build_family(GraphFamily::complete(n)), kChecked) - 2.0 * n));
    worst = std::max(worst, std::fabs(e_complete(n).value - 2.0 * n));
  }
  c.require(worst < kClosedFormTolerance, "K_n, n = 2..10: worst " + fmt("%.2g", worst));
  worst = 0;
  for (int n = 3; n <= 11; n += 2) {
    worst = std::max(worst, std::fabs(local_energy(build_family(GraphFamily::cycle(n)), kChecked) - 2.0 * n));
    worst = std::max(worst, std::fabs(e_cycle(n).value - 2.0 * n));
  }
  c.require(worst < kClosedFormTolerance, "C_n, odd n = 3..11: worst " + fmt("%.2g", worst));
  worst = 0;
  for (int p = 1; p <= 5; ++p)
    for (int q = p; q <= 5; ++q)
      worst = std::max(worst, std::fabs(e_complete_bipartite(p, q).value -
                                        local_energy(build_family(GraphFamily::complete_bipartite(p, q)), kChecked)));
  c.require(worst < kClosedFormTolerance, "K_{p,q}, 1 <= p <= q <= 5: worst " + fmt("%.2g", worst));

  const double direct = local_energy(build_family(GraphFamily::cycle(4)), kChecked);
  const double exact = 16 - 8 * std::numbers::sqrt2;
  c.require(std::fabs(direct - exact) < kClosedFormTolerance,
            "direct e(C_4) = " + fmt("%.10g", direct) + ", 16 - 8 sqrt 2 = " + fmt("%.10g", exact));
  const double printed = published_cycle_expression(4);
  c.require(std::fabs(printed - direct) > kEvenCycleGap,
            "printed even-n expression at n = 4 gives " + fmt("%.10g", printed) +
                ", off by " + fmt("%.6g", std::fabs(printed - direct)) + " (documented discrepancy)");
  double corrected = 0;
  for (int n = 4; n <= 12; n += 2)
    corrected = std::max(corrected, std::fabs(e_cycle(n).value - local_energy(build_family(GraphFamily::cycle(n)))));
  c.info("corrected even-n form, n = 4..12: worst residual " + fmt("%.2g", corrected));
  return c;
}

Criterion properties() {
  Criterion c{5, "additivity, isolated-vertex neutrality, degree bound, spectrum checks, graph6 round trip"};
  std::mt19937_64 rng(20241015);

  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 1, 8);
    const Graph h = random_graph(rng, 1, 8);
    worst = std::max(worst, std::fabs(local_energy(disjoint_union(g, h), kChecked) - local_energy(g, kChecked) -
                                      local_energy(h, kChecked)));
  }
  c.require(worst < kAdditivityTolerance, "additivity, 200 random pairs of orders 1..8: worst " + fmt("%.2g", worst));

  worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 1, 10);
    worst = std::max(worst, std::fabs(local_energy(disjoint_union(g, Graph(1)), kChecked) - local_energy(g, kChecked)));
  }
  c.require(worst < kNeutralityTolerance, "isolated vertex, 100 random graphs: worst " + fmt("%.2g", worst));

  std::size_t vertices = 0;
  std::size_t tight = 0;
  std::size_t violations = 0;
  for (int n = 1; n <= 7; ++n) {
    GenerationTask task;
    task.order = n;
    generate(task, [&](const Graph& g) {
      const LocalEnergyProfile p = local_energy_profile(g, kChecked);
      for (int v = 0; v < n; ++v) {
        ++vertices;
        const double bound = 2 * std::sqrt(double(g.degree(v)));
        const bool at_bound = std::fabs(p.per_vertex[v] - bound) < kTightTolerance;
        tight += at_bound;
        if (p.per_vertex[v] > bound + kBoundSlack || at_bound != is_star_center(g, VertexId{v})) ++violations;
      }
    });
  }
  c.require(violations == 0, "E_G(v) <= 2 sqrt(deg v), equality iff star centre: " + std::to_string(vertices) +
                                 " vertices of all graphs n <= 7, " + std::to_string(tight) + " at the bound, " +
                                 std::to_string(violations) + " violations");
  c.info("trace and sum-of-squares checks ran on every eigensolve of criteria 1, 2, 4 and 5");

  std::size_t round_trips = 0;
  bool ok = true;
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      for (int j = 1, k = 0; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((mask >> k) & 1U) g.add_edge(i, j);
      ++round_trips;
      ok = ok && decode_graph6(encode_graph6(g)) == g;
    }
  }
  c.require(ok, "graph6 round trip on all " + std::to_string(round_trips) + " labelled graphs of order <= 5");
  return c;
}

Criterion decomposition() {
  Criterion c{6, "e(K_n) = e(K_n1 + ... + K_nk) for every partition of every n <= 8"};
  for (int n = 1; n <= 8; ++n) {
    std::size_t total = 0;
    std::vector<std::string> failures;
    for (const auto& parts : integer_partitions(n)) {
      ++total;
      if (!verify_kn_decomposition(n, parts)) {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        failures.push_back(s + ")");
      }
    }
    std::string line = "n = " + std::to_string(n) + ": " + std::to_string(total - failures.size()) + "/" +
                       std::to_string(total) + " partitions";
    if (!failures.empty()) {
      line += "; failing:";
      for (const auto& f : failures) line += " " + f;
    }
    c.require(failures.empty(), line);
  }
  // Direct view of the failing cases: every one contains a part 1.
  const double k7 = local_energy(build_family(GraphFamily::complete(7)));
  const double k6k1 = local_energy(parse_family_expression("K6+K1"));
  c.info("e(K_1) = " + fmt("%.10g", local_energy(Graph(1))) + "; e(K_7) = " + fmt("%.10g", k7) +
         ", e(K_6+K_1) = " + fmt("%.10g", k6k1) + " (tolerance " + fmt("%.0e", kDecompositionTolerance) + ")");
  std::size_t without_unit = 0;
  std::size_t without_unit_ok = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& parts : integer_partitions(n))
      if (std::find(parts.begin(), parts.end(), 1) == parts.end()) {
        ++without_unit;
        without_unit_ok += verify_kn_decomposition(n, parts);
      }
  c.info("partitions with all parts >= 2: " + std::to_string(without_unit_ok) + "/" + std::to_string(without_unit) + " hold");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool long_run = false;
  std::string threads_text = "1";
  app.add_flag("--long-run", long_run, "Also classify connected graphs of order 10");
  app.add_option("--threads", threads_text, "Worker count or 'auto'");
  CLI11_PARSE(app, argc, argv);
  const int threads = threads_text == "auto" ? 0 : std::stoi(threads_text);

  std::vector<Criterion> results;
  const auto record = [&](Criterion c) {
    c.print();
    results.push_back(std::move(c));
  };
  record(fixtures(threads));
  record(corollary(threads, long_run));
  record(generator());
  record(closed_forms());
  record(properties());
  record(decomposition());

  int passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::cout << passed << "/" << results.size() << " criteria pass\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
