#include "lenergy/equienergy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "lenergy/canonical.hpp"
#include "lenergy/family.hpp"
#include "lenergy/graph6.hpp"

namespace lenergy {

EnergyRecord make_energy_record(const Graph& g, const SpectralOptions& options) {
  const LocalEnergyProfile profile = local_energy_profile<double>(g, options);
  EnergyRecord record;
  record.energy = profile.total;
  record.min_vertex = profile.per_vertex.empty()
                          ? 0.0
                          : *std::min_element(profile.per_vertex.begin(), profile.per_vertex.end());
  record.graph6 = encode_graph6(g);
  return record;
}

long double precise_local_energy(const Graph& g) {
  return local_energy_profile<long double>(g).total;
}

Classifier::Classifier(int order, Tolerances tolerances, bool connected_only)
    : order_(order), tolerances_(tolerances), connected_only_(connected_only) {
  if (!(tolerances.bucket >= tolerances.confirm) || !(tolerances.confirm > 0)) {
    throw std::invalid_argument("tolerances must satisfy bucket >= confirm > 0");
  }
}

void Classifier::add(const Graph& g) {
  sorted_ = false;
  if (g.order() != order_) {
    throw std::invalid_argument("graph of order " + std::to_string(g.order()) +
                                " in a classification of order " + std::to_string(order_));
  }
  records_.push_back(make_energy_record(canonical_form(g)));
}

void Classifier::add(EnergyRecord record) {
  if (record.graph6.empty() ||
      static_cast<unsigned char>(record.graph6.front()) - 63 != order_) {
    throw std::invalid_argument("record " + record.graph6 + " does not have order " +
                                std::to_string(order_));
  }
  sorted_ = false;
  records_.push_back(std::move(record));
}

namespace {

struct Precise {
  long double energy;
  const std::string* graph6;
};

void add_near_miss(std::vector<NearMiss>& out, const Precise& a, const Precise& b) {
  out.push_back(NearMiss{*a.graph6, *b.graph6, static_cast<double>(std::fabs(a.energy - b.energy))});
}

}  // namespace

void Classifier::sort_records() {
  if (sorted_) return;
  std::sort(records_.begin(), records_.end(), [](const EnergyRecord& a, const EnergyRecord& b) {
    return a.energy != b.energy ? a.energy < b.energy : a.graph6 < b.graph6;
  });
  // Identical canonical graphs have bit-identical energies, so repeats are adjacent.
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (records_[i].graph6 == records_[i - 1].graph6) {
      throw std::invalid_argument("isomorphism class " + records_[i].graph6 + " given twice");
    }
  }
  sorted_ = true;
}

ClassificationReport Classifier::report_with(Tolerances tolerances) {
  if (!(tolerances.bucket >= tolerances.confirm) || !(tolerances.confirm > 0)) {
    throw std::invalid_argument("tolerances must satisfy bucket >= confirm > 0");
  }
  sort_records();
  ClassificationReport report;
  report.order = order_;
  report.connected_only = connected_only_;
  report.tolerances = tolerances;
  report.total_graphs = records_.size();

  double min_vertex = std::numeric_limits<double>::infinity();
  for (const auto& r : records_) min_vertex = std::min(min_vertex, r.min_vertex);
  report.min_vertex_local_energy = records_.empty() ? 0.0 : min_vertex;

  // Stage 1: chains of neighbours closer than the bucket tolerance.
  std::size_t begin = 0;
  while (begin < records_.size()) {
    std::size_t end = begin + 1;
    while (end < records_.size() &&
           records_[end].energy - records_[end - 1].energy < tolerances.bucket) {
      ++end;
    }
    if (end - begin < 2) {
      begin = end;
      continue;
    }

    // Stage 2: extended-precision values, chained at the confirm tolerance.
    std::vector<Precise> group;
    for (std::size_t i = begin; i < end; ++i) {
      group.push_back({precise_local_energy(decode_graph6(records_[i].graph6)), &records_[i].graph6});
    }
    std::sort(group.begin(), group.end(), [](const Precise& a, const Precise& b) {
      return a.energy != b.energy ? a.energy < b.energy : *a.graph6 < *b.graph6;
    });
    std::vector<std::size_t> chain_of(group.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> chains;
    for (std::size_t i = 0; i < group.size();) {
      std::size_t j = i + 1;
      while (j < group.size() &&
             group[j].energy - group[j - 1].energy < static_cast<long double>(tolerances.confirm)) {
        ++j;
      }
      for (std::size_t k = i; k < j; ++k) chain_of[k] = chains.size();
      chains.emplace_back(i, j);
      i = j;
    }

    std::vector<bool> settled(chains.size(), false);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      const auto [lo, hi] = chains[c];
      const long double spread = group[hi - 1].energy - group[lo].energy;
      if (hi - lo < 2 || spread >= static_cast<long double>(tolerances.confirm)) continue;
      settled[c] = true;
      EquienergeticClass cls;
      cls.order = order_;
      long double sum = 0;
      for (std::size_t k = lo; k < hi; ++k) {
        sum += group[k].energy;
        cls.members.push_back(*group[k].graph6);
      }
      cls.energy = static_cast<double>(sum / static_cast<long double>(hi - lo));
      cls.spread = static_cast<double>(spread);
      std::sort(cls.members.begin(), cls.members.end());
      report.classes.push_back(std::move(cls));
    }

    // Any pair closer than the bucket tolerance that was not confirmed as one
    // class is reported instead of being decided silently.
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (chain_of[a] == chain_of[b] && settled[chain_of[a]]) continue;
        if (group[b].energy - group[a].energy < static_cast<long double>(tolerances.bucket)) {
          add_near_miss(report.near_misses, group[a], group[b]);
        }
      }
    }
    begin = end;
  }

  std::sort(report.classes.begin(), report.classes.end(),
            [](const EquienergeticClass& a, const EquienergeticClass& b) {
              return a.energy != b.energy ? a.energy < b.energy : a.members < b.members;
            });
  return report;
}

ClassificationReport classify(std::span<const Graph> graphs, int order, Tolerances tolerances,
                              bool connected_only) {
  const auto start = std::chrono::steady_clock::now();
  Classifier classifier(order, tolerances, connected_only);
  for (const Graph& g : graphs) classifier.add(g);
  ClassificationReport report = classifier.finish();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ClassificationReport classify_generated(const GenerationTask& task, Tolerances tolerances,
                                        int threads, const SpectralOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Classifier classifier(task.order, tolerances, task.connected_only);
  generate_mapped(
      task, threads, [&](const Graph& g) { return make_energy_record(g, options); },
      [&](EnergyRecord&& record) { classifier.add(std::move(record)); });
  ClassificationReport report = classifier.finish();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ClassSet class_set(const ClassificationReport& report) {
  ClassSet out;
  for (const auto& cls : report.classes) out.emplace(cls.members.begin(), cls.members.end());
  return out;
}

const std::vector<PublishedFixture>& published_fixtures() {
  // Verbatim class lists; "C4'" is the 4-cycle with a diagonal and "P4'" the
  // triangle with a tail.
  static const std::vector<PublishedFixture> fixtures = {
      {4, {{"K4", "2K2"}}},
      {5,
       {
           {"K5", "K3+K2", "C5"},
           {"K4+K1", "2K2+K1"},
       }},
      {6,
       {
           {"K6", "K4+K2", "K3+K3", "3K2"},
           {"K5+K1", "K3+K2+K1", "C5+K1"},
           {"K4+2K1", "2K2+2K1"},
       }},
      {7,
       {
           {"K7", "K5+K2", "K4+K3", "K3+2K2", "C7", "C5+K2"},
           {"K6+K1", "K4+K2+K1", "2K3+K1", "3K2+K1"},
           {"K5+2K1", "K3+K2+2K1", "C5+2K1"},
           {"K4+3K1", "2K2+3K1"},
           {"K4+P3", "2K2+P3"},
       }},
      {8,
       {
           {"K8", "K6+K2", "K5+K3", "2K4", "2K3+K2", "C5+K3", "4K2"},
           {"K7+K1", "K5+K2+K1", "K4+K3+K1", "K3+2K2+K1", "C7+K1", "C5+K2+K1"},
           {"K6+2K1", "K4+K2+2K1", "K3+K3+2K1", "3K2+2K1"},
           {"K5+3K1", "K3+K2+3K1", "C5+3K1"},
           {"K4+4K1", "2K2+4K1"},
           {"K4+P3+K1", "2K2+P3+K1"},
           {"K4+C4", "2K2+C4"},
           {"K4+C4'", "2K2+C4'"},
           {"K4+S4", "2K2+S4"},
           {"K4+P4", "2K2+P4"},
           {"K4+P4'", "2K2+P4'"},
           {"K5+P3", "K3+K2+P3", "C5+P3"},
       }},
  };
  return fixtures;
}

const std::vector<FixtureErratum>& fixture_errata() {
  static const std::vector<FixtureErratum> errata = {
      {8, "K8", "K4+2K2",
       "e(K4+2K2) = e(K4) + 2 e(K2) = 8 + 4 + 4 = 16 = e(K8); the partition 8 = 4+2+2 is the only "
       "one of 8 into parts >= 2 absent from the list"},
  };
  return errata;
}

PublishedFixture corrected_fixture(const PublishedFixture& fixture) {
  PublishedFixture out = fixture;
  for (const auto& erratum : fixture_errata()) {
    if (erratum.order != fixture.order) continue;
    for (auto& cls : out.expected_classes) {
      if (std::find(cls.begin(), cls.end(), erratum.class_representative) != cls.end()) {
        cls.push_back(erratum.missing_member);
      }
    }
  }
  return out;
}

ClassSet resolve_fixture(const PublishedFixture& fixture) {
  ClassSet out;
  for (const auto& cls : fixture.expected_classes) {
    std::set<std::string> members;
    for (const auto& expr : cls) {
      const Graph g = parse_family_expression(expr);
      if (g.order() != fixture.order) {
        throw std::invalid_argument("fixture expression " + expr + " has order " +
                                    std::to_string(g.order()) + ", expected " +
                                    std::to_string(fixture.order));
      }
      members.insert(encode_graph6(canonical_form(g)));
    }
    out.insert(std::move(members));
  }
  return out;
}

namespace {

std::string describe_g6(const std::string& g6) {
  return describe_graph(decode_graph6(g6)) + " [" + g6 + "]";
}

std::string join_described(const std::set<std::string>& members) {
  std::string out = "{";
  for (const auto& m : members) {
    if (out.size() > 1) out += ", ";
    out += describe_g6(m);
  }
  return out + "}";
}

}  // namespace

FixtureVerdict compare_classes(const ClassSet& expected, const ClassificationReport& report) {
  FixtureVerdict verdict;
  const ClassSet actual = class_set(report);
  for (const auto& cls : expected) {
    if (actual.count(cls)) continue;
    const std::set<std::string>* overlap = nullptr;
    for (const auto& candidate : actual) {
      if (std::any_of(cls.begin(), cls.end(), [&](const auto& m) { return candidate.count(m); })) {
        overlap = &candidate;
        break;
      }
    }
    if (!overlap) {
      verdict.diff.push_back("missing class " + join_described(cls));
      continue;
    }
    std::set<std::string> missing, extra;
    std::set_difference(cls.begin(), cls.end(), overlap->begin(), overlap->end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(overlap->begin(), overlap->end(), cls.begin(), cls.end(),
                        std::inserter(extra, extra.end()));
    std::string line = "class " + join_described(cls) + " differs:";
    if (!missing.empty()) line += " missing " + join_described(missing);
    if (!extra.empty()) line += " extra " + join_described(extra);
    verdict.diff.push_back(line);
  }
  for (const auto& cls : actual) {
    bool touched = false;
    for (const auto& e : expected) {
      touched = touched || std::any_of(cls.begin(), cls.end(), [&](const auto& m) { return e.count(m); });
    }
    if (!touched) verdict.diff.push_back("unexpected class " + join_described(cls));
  }
  verdict.pass = verdict.diff.empty();
  return verdict;
}

FixtureVerdict verify_fixture(const PublishedFixture& fixture, const ClassificationReport& report) {
  if (fixture.order != report.order) {
    throw std::invalid_argument("fixture order does not match report order");
  }
  return compare_classes(resolve_fixture(fixture), report);
}

void write_fixture(const ClassificationReport& report, std::ostream& out,
                   const std::string& provenance) {
  std::istringstream lines(provenance);
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << "# order " << report.order << (report.connected_only ? ", connected only" : "") << ", "
      << report.total_graphs << " graphs, " << report.classes.size() << " classes\n";
  bool first = true;
  for (const auto& cls : report.classes) {
    if (!first) out << '\n';
    first = false;
    for (const auto& m : cls.members) out << m << '\n';
  }
}

ClassSet read_fixture(std::istream& in) {
  ClassSet out;
  std::set<std::string> current;
  std::string line;
  std::size_t offset = 0;
  auto flush = [&] {
    if (!current.empty()) out.insert(std::move(current));
    current.clear();
  };
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      flush();
      continue;
    }
    try {
      current.insert(encode_graph6(canonical_form(decode_graph6(line))));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), here + e.offset());
    }
  }
  flush();
  return out;
}

ClassSet expected_connected_classes(int order) {
  ClassSet out;
  if (order >= 5 && order % 2 == 1) {
    out.insert({encode_graph6(canonical_form(build_family(GraphFamily::complete(order)))),
                encode_graph6(canonical_form(build_family(GraphFamily::cycle(order))))});
  }
  return out;
}

CorollaryVerdict judge_connected_report(const ClassificationReport& report) {
  CorollaryVerdict v;
  v.order = report.order;
  const FixtureVerdict cmp = compare_classes(expected_connected_classes(report.order), report);
  v.pass = report.connected_only && cmp.pass && report.near_misses.empty();
  std::ostringstream detail;
  detail << report.total_graphs << (report.connected_only ? " connected" : "") << " graphs, "
         << report.classes.size() << " classes, " << report.near_misses.size() << " near misses";
  for (const auto& d : cmp.diff) detail << "; " << d;
  v.detail = detail.str();
  v.report = report;
  return v;
}

std::vector<CorollaryVerdict> verify_connected_corollary(int max_order, Tolerances tolerances,
                                                         int threads) {
  std::vector<CorollaryVerdict> verdicts;
  for (int n = 1; n <= max_order; ++n) {
    GenerationTask task;
    task.order = n;
    task.connected_only = true;
    task.best_effort = n > kCertifiedMaxOrder;
    verdicts.push_back(judge_connected_report(classify_generated(task, tolerances, threads)));
  }
  return verdicts;
}

bool verify_kn_decomposition(int n, std::span<const int> parts) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  long sum = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("parts must be positive");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("parts do not sum to n");
  Graph unions;
  for (int p : parts) unions = disjoint_union(unions, build_family(GraphFamily::complete(p)));
  const double whole = local_energy(build_family(GraphFamily::complete(n)));
  return std::fabs(whole - local_energy(unions)) < 1e-8;
}

namespace {

void partitions_into(int remaining, int largest, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  return out;
}

ClassSet predicted_complete_union_classes(int order) {
  std::map<int, std::set<std::string>> by_energy;
  for (const auto& parts : integer_partitions(order)) {
    Graph g;
    int weight = 0;
    for (int p : parts) {
      g = disjoint_union(g, build_family(GraphFamily::complete(p)));
      if (p > 1) weight += p;
    }
    by_energy[weight].insert(encode_graph6(canonical_form(g)));
  }
  ClassSet out;
  for (auto& [weight, members] : by_energy) {
    if (members.size() >= 2) out.insert(std::move(members));
  }
  return out;
}

FixtureVerdict verify_complete_union_closure(const ClassificationReport& report) {
  FixtureVerdict verdict;
  const ClassSet actual = class_set(report);
  for (const auto& predicted : predicted_complete_union_classes(report.order)) {
    const bool covered = std::any_of(actual.begin(), actual.end(), [&](const auto& cls) {
      return std::includes(cls.begin(), cls.end(), predicted.begin(), predicted.end());
    });
    if (!covered) verdict.diff.push_back("predicted class not contained in any reported class: " +
                                         join_described(predicted));
  }
  verdict.pass = verdict.diff.empty();
  return verdict;
}

}  // namespace lenergy
