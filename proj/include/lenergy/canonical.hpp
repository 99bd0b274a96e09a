#ifndef LENERGY_CANONICAL_HPP
#define LENERGY_CANONICAL_HPP

#include <vector>

#include "lenergy/graph.hpp"

namespace lenergy {

struct CanonicalLabeling {
  /// position[v] is the canonical index of vertex v.
  std::vector<int> position;
  /// permute(g, position).
  Graph graph;
};

/// Exact canonical labelling by individualisation-refinement search.
///
/// The search tree is the usual one: refine to an equitable ordered partition,
/// individualise each vertex of the first non-singleton cell, recurse. Every
/// discrete leaf yields a relabelled graph; the labelling whose graph6 bit
/// string is smallest is kept. Leaves with identical bit strings define
/// automorphisms, which prune sibling subtrees lying in the same orbit and
/// trigger back-jumps to the level where two equivalent paths diverge. The
/// tree depends only on the isomorphism class of g, so the minimum does too.
CanonicalLabeling canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace lenergy

#endif  // LENERGY_CANONICAL_HPP
