#ifndef LENERGY_CLOSED_FORMS_HPP
#define LENERGY_CLOSED_FORMS_HPP

#include <optional>
#include <string_view>

namespace lenergy {

enum class FormulaSource {
  Published,  // closed form as published for the family
  Corrected,  // closed form re-derived from E(G) - E(G - v)
  Direct,     // eigenvalue computation only
};

std::string_view to_string(FormulaSource source);

struct FormulaResult {
  double value = 0;
  FormulaSource source = FormulaSource::Direct;
  /// |value - direct computation|; present whenever source != Direct.
  std::optional<double> residual;
  /// Value of the published expression when it differs from `value`'s source
  /// (even cycles); lets callers audit the discrepancy.
  std::optional<double> published_value;
};

/// e(K_n) = 2n for n >= 2; e(K_1) = 0 by convention.
FormulaResult e_complete(int n);

/// Odd n: 2n (Published). Even n: n * (E(C_n) - E(P_{n-1})) in closed
/// trigonometric form (Corrected), with the published even-n expression
/// reported alongside.
FormulaResult e_cycle(int n);

/// 2(p+q)sqrt(pq) - 2p sqrt((p-1)q) - 2q sqrt((q-1)p).
FormulaResult e_complete_bipartite(int p, int q);

/// The published e(C_n) expression evaluated exactly as printed, for any n >= 3.
double published_cycle_expression(int n);

/// E(C_n) = sum_j |2 cos(2 pi j / n)| in closed form: 4cot(pi/n) for
/// n = 0 mod 4, 4csc(pi/n) for n = 2 mod 4, 2csc(pi/2n) for odd n.
double cycle_energy_closed(int n);

/// E(P_n) = sum_j |2 cos(pi j / (n+1))| in closed form: 2csc(pi/(2n+2)) - 2
/// for even n, 2cot(pi/(2n+2)) - 2 for odd n.
double path_energy_closed(int n);

}  // namespace lenergy

#endif  // LENERGY_CLOSED_FORMS_HPP
