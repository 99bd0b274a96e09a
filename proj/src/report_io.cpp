#include "lenergy/report_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "lenergy/family.hpp"
#include "lenergy/graph6.hpp"

namespace lenergy {

std::string format_real(double value) {
  if (std::fabs(value) < 5e-13) value = 0.0;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%#.10g", value);
  return buffer;
}

std::string report_to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["order"] = report.order;
  j["connected_only"] = report.connected_only;
  j["total_graphs"] = report.total_graphs;
  j["tolerances"] = {{"bucket", report.tolerances.bucket}, {"confirm", report.tolerances.confirm}};
  j["min_vertex_local_energy"] = report.min_vertex_local_energy;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& cls : report.classes) {
    nlohmann::ordered_json c;
    c["energy"] = cls.energy;
    c["spread"] = cls.spread;
    c["members"] = cls.members;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  auto misses = nlohmann::ordered_json::array();
  for (const auto& m : report.near_misses) {
    misses.push_back({{"first", m.first}, {"second", m.second}, {"difference", m.difference}});
  }
  j["near_misses"] = std::move(misses);
  return j.dump(2);
}

namespace {

// graph6 strings never contain commas or double quotes.
void write_csv_row(std::ostream& out, std::size_t index, double energy, const std::string& g6) {
  out << index << ',' << format_real(energy) << ',' << g6 << '\n';
}

}  // namespace

void write_report_csv(const ClassificationReport& report, std::ostream& out) {
  out << "class,energy,member\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    for (const auto& m : report.classes[i].members) write_csv_row(out, i + 1, report.classes[i].energy, m);
  }
}

void write_report_text(const ClassificationReport& report, std::ostream& out) {
  out << "order " << report.order << (report.connected_only ? " (connected only)" : "") << ": "
      << report.total_graphs << " graphs, " << report.classes.size() << " classes, "
      << report.near_misses.size() << " near misses\n";
  out << "tolerances: bucket " << report.tolerances.bucket << ", confirm "
      << report.tolerances.confirm << "\n";
  out << "smallest vertex local energy: " << format_real(report.min_vertex_local_energy) << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& cls = report.classes[i];
    out << "class " << i + 1 << ": e = " << format_real(cls.energy) << " (" << cls.members.size()
        << " members)\n";
    for (const auto& m : cls.members) {
      out << "  " << m << "  " << describe_graph(decode_graph6(m)) << "\n";
    }
  }
  for (const auto& m : report.near_misses) {
    out << "near miss: " << m.first << " " << m.second << " differ by " << m.difference << "\n";
  }
}

}  // namespace lenergy
