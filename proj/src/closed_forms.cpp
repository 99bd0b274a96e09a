#include "lenergy/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lenergy/family.hpp"
#include "lenergy/spectral.hpp"

namespace lenergy {

namespace {

using std::numbers::pi;

double cot(double x) { return std::cos(x) / std::sin(x); }
double csc(double x) { return 1.0 / std::sin(x); }

double direct(const GraphFamily& family) { return local_energy(build_family(family)); }

}  // namespace

std::string_view to_string(FormulaSource source) {
  switch (source) {
    case FormulaSource::Published: return "published";
    case FormulaSource::Corrected: return "corrected";
    case FormulaSource::Direct: return "direct";
  }
  return "unknown";
}

FormulaResult e_complete(int n) {
  if (n < 1) throw std::invalid_argument("e_complete needs n >= 1");
  FormulaResult r;
  r.value = n == 1 ? 0.0 : 2.0 * n;
  r.source = FormulaSource::Published;
  if (n <= kMaxOrder) r.residual = std::abs(r.value - direct(GraphFamily::complete(n)));
  return r;
}

double cycle_energy_closed(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (n % 4 == 0) return 4.0 * cot(pi / n);
  if (n % 4 == 2) return 4.0 * csc(pi / n);
  return 2.0 * csc(pi / (2.0 * n));
}

double path_energy_closed(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  const double angle = pi / (2.0 * (n + 1));
  return n % 2 == 0 ? 2.0 * csc(angle) - 2.0 : 2.0 * cot(angle) - 2.0;
}

double published_cycle_expression(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  const double half = pi / (2.0 * n);
  if (n % 2 == 1) return 2.0 * n;
  if (n % 4 == 0) return 2.0 * n - 2.0 * n * cot(half) + 4.0 * n * cot(half);
  return 2.0 * n - 2.0 * n * cot(half) + 4.0 * n * csc(half);
}

FormulaResult e_cycle(int n) {
  if (n < 3) throw std::invalid_argument("e_cycle needs n >= 3");
  FormulaResult r;
  if (n % 2 == 1) {
    r.value = 2.0 * n;
    r.source = FormulaSource::Published;
  } else {
    // Every vertex of C_n is equivalent and C_n - v = P_{n-1}.
    r.value = n * (cycle_energy_closed(n) - path_energy_closed(n - 1));
    r.source = FormulaSource::Corrected;
    r.published_value = published_cycle_expression(n);
  }
  if (n <= kMaxOrder) r.residual = std::abs(r.value - direct(GraphFamily::cycle(n)));
  return r;
}

FormulaResult e_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("e_complete_bipartite needs p, q >= 1");
  FormulaResult r;
  r.value = 2.0 * (p + q) * std::sqrt(double(p) * q) - 2.0 * p * std::sqrt(double(p - 1) * q) -
            2.0 * q * std::sqrt(double(q - 1) * p);
  r.source = FormulaSource::Published;
  if (p + q <= kMaxOrder) r.residual = std::abs(r.value - direct(GraphFamily::complete_bipartite(p, q)));
  return r;
}

}  // namespace lenergy
