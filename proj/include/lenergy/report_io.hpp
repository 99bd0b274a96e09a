#ifndef LENERGY_REPORT_IO_HPP
#define LENERGY_REPORT_IO_HPP

#include <ostream>
#include <string>

#include "lenergy/equienergy.hpp"

namespace lenergy {

/// Fixed 10-significant-digit rendering used for all human-readable numbers.
/// Magnitudes below 5e-13 print as zero.
std::string format_real(double value);

/// {"order", "connected_only", "total_graphs", "tolerances": {"bucket",
///  "confirm"}, "min_vertex_local_energy", "classes": [{"energy", "spread",
///  "members": [...]}], "near_misses": [{"first", "second", "difference"}]}
std::string report_to_json(const ClassificationReport& report);

/// Header "class,energy,member", one row per class member.
void write_report_csv(const ClassificationReport& report, std::ostream& out);

void write_report_text(const ClassificationReport& report, std::ostream& out);

}  // namespace lenergy

#endif  // LENERGY_REPORT_IO_HPP
