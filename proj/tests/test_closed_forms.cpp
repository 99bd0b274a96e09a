#include <doctest.h>

#include <cmath>

#include "lenergy/closed_forms.hpp"
#include "lenergy/family.hpp"
#include "lenergy/spectral.hpp"
#include "support/oracles.hpp"

using namespace lenergy;

TEST_CASE("complete graphs") {
  CHECK(e_complete(1).value == 0);
  for (int n = 2; n <= 12; ++n) {
    const FormulaResult r = e_complete(n);
    CHECK(r.value == 2.0 * n);
    CHECK(std::fabs(oracle::local_energy(parse_family_expression("K" + std::to_string(n))) - 2.0 * n) < 1e-9);
    REQUIRE(r.residual.has_value());
    CHECK(*r.residual < 1e-9);
  }
  CHECK_THROWS_AS(e_complete(0), std::invalid_argument);
}

TEST_CASE("cycles") {
  for (int n = 3; n <= 15; n += 2) {
    const FormulaResult r = e_cycle(n);
    CHECK(r.source == FormulaSource::Published);
    CHECK(r.value == 2.0 * n);
    CHECK(std::fabs(oracle::cycle_local_energy(n) - 2.0 * n) < 1e-9);
  }
  for (int n = 4; n <= 16; n += 2) {
    const FormulaResult r = e_cycle(n);
    CHECK(r.source == FormulaSource::Corrected);
    CHECK(std::fabs(r.value - oracle::cycle_local_energy(n)) < 1e-9);
    REQUIRE(r.published_value.has_value());
    CHECK(std::fabs(*r.published_value - r.value) > 1.0);
  }
  CHECK(std::fabs(e_cycle(4).value - (16 - 8 * std::sqrt(2.0))) < 1e-10);
  CHECK(std::fabs(e_cycle(6).value - 15.21539) < 1e-5);
  CHECK_THROWS_AS(e_cycle(2), std::invalid_argument);
}

TEST_CASE("closed energies of cycles and paths") {
  for (int n = 3; n <= 20; ++n) CHECK(std::fabs(cycle_energy_closed(n) - oracle::cycle_energy(n)) < 1e-10);
  for (int n = 1; n <= 20; ++n) CHECK(std::fabs(path_energy_closed(n) - oracle::path_energy(n)) < 1e-10);
}

TEST_CASE("complete bipartite graphs") {
  CHECK(std::fabs(e_complete_bipartite(1, 3).value - (8 * std::sqrt(3.0) - 6 * std::sqrt(2.0))) < 1e-12);
  CHECK(std::fabs(e_complete_bipartite(2, 2).value - (16 - 8 * std::sqrt(2.0))) < 1e-12);
  for (int p = 1; p <= 6; ++p) {
    for (int q = p; q <= 6; ++q) {
      const FormulaResult r = e_complete_bipartite(p, q);
      CHECK(std::fabs(r.value - oracle::bipartite_local_energy(p, q)) < 1e-9);
      const Graph g = build_family(GraphFamily::complete_bipartite(p, q));
      CHECK(std::fabs(r.value - oracle::local_energy(g)) < 1e-9);
      CHECK(std::fabs(r.value - e_complete_bipartite(q, p).value) < 1e-12);
    }
  }
  CHECK_THROWS_AS(e_complete_bipartite(0, 3), std::invalid_argument);
}
