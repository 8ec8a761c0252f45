#pragma once

#include <cstddef>
#include <vector>

#include "gcalg/graph.hpp"

namespace gcalg {

inline constexpr std::size_t kDefaultMaxVertices = 16;

// Every edge with domain in X has range in X.
bool is_positively_invariant(const DiscreteGraph& graph, const VertexSet& x);
// Every regular vertex of X receives an edge with domain in X.
bool is_negatively_invariant(const DiscreteGraph& graph, const VertexSet& x);
bool is_invariant(const DiscreteGraph& graph, const VertexSet& x);

// d(r^{-1}(V)) is contained in V.
bool is_hereditary(const DiscreteGraph& graph, const VertexSet& v);
// Each regular vertex whose in-edge domains all lie in V is in V.
bool is_saturated(const DiscreteGraph& graph, const VertexSet& v);

// H(V): smallest hereditary superset, i.e. V together with every vertex from
// which V is reachable.
VertexSet hereditary_closure(const DiscreteGraph& graph, const VertexSet& v);

// S(V): V_0 = V, V_{k+1} = V_k plus the regular vertices whose in-edge
// domains lie in V_k, iterated to the fixed point (at most |E0| rounds).
VertexSet saturated_closure(const DiscreteGraph& graph, const VertexSet& v);

// E0 \ S(H(V)): the largest invariant set disjoint from V.
VertexSet largest_invariant_avoiding(const DiscreteGraph& graph, const VertexSet& v);

// All invariant subsets in canonical order. Throws BoundExceeded when the
// graph has more than `max_vertices` vertices (hard cap 64).
std::vector<VertexSet> enumerate_invariant_sets(const DiscreteGraph& graph,
                                                std::size_t max_vertices = kDefaultMaxVertices);

} // namespace gcalg
