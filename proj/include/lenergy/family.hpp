#ifndef LENERGY_FAMILY_HPP
#define LENERGY_FAMILY_HPP

#include <string>
#include <string_view>

#include "lenergy/graph.hpp"

namespace lenergy {

enum class FamilyKind { Complete, Cycle, Path, Star, CompleteBipartite, Diamond, Paw, Null, Singleton };

/// A named graph family member. Diamond is K_4 minus an edge (the 4-cycle
/// with a chord), Paw is a triangle with a pendant vertex.
struct GraphFamily {
  FamilyKind kind = FamilyKind::Null;
  int p = 0;
  int q = 0;

  static GraphFamily complete(int n) { return {FamilyKind::Complete, n, 0}; }
  static GraphFamily cycle(int n) { return {FamilyKind::Cycle, n, 0}; }
  static GraphFamily path(int n) { return {FamilyKind::Path, n, 0}; }
  static GraphFamily star(int n) { return {FamilyKind::Star, n, 0}; }
  static GraphFamily complete_bipartite(int p, int q) { return {FamilyKind::CompleteBipartite, p, q}; }
  static GraphFamily diamond() { return {FamilyKind::Diamond, 0, 0}; }
  static GraphFamily paw() { return {FamilyKind::Paw, 0, 0}; }
  static GraphFamily null() { return {FamilyKind::Null, 0, 0}; }
  static GraphFamily singleton() { return {FamilyKind::Singleton, 0, 0}; }
};

/// Star(n) has n vertices with vertex 0 as centre. Complete bipartite K_{p,q}
/// puts the p-side first. Paw's pendant vertex is vertex 3.
Graph build_family(const GraphFamily& family);

/// Parses a union expression such as "K4+K2+K1", "2K2+P3", "C5+3K1",
/// "K2,3", "Diamond+S4" or "C4'" / "P4'" (aliases of Diamond and Paw).
/// Terms are K<n>, C<n>, P<n>, S<n>, K<p>,<q>, Diamond, Paw, Null, each with
/// an optional multiplicity prefix. Throws ParseError naming the byte offset.
Graph parse_family_expression(std::string_view text);

/// Inverse of parse_family_expression where possible: names each component
/// as K<n>, C<n>, P<n>, S<n>, C4' or P4', falling back to "G(<graph6>)" of
/// its canonical form, and merges repeats ("K4+2K2+K1").
std::string describe_graph(const Graph& g);

}  // namespace lenergy

#endif  // LENERGY_FAMILY_HPP
