#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcalg/closures.hpp"
#include "gcalg/graph.hpp"

namespace gcalg {

// (X0, Z) with X0 invariant and X0_sg <= Z <= E0_sg & X0, where X0_sg is
// taken in the restricted graph. Admissible pairs correspond to
// gauge-invariant ideals; the correspondence reverses inclusion.
struct AdmissiblePair {
    VertexSet x0;
    VertexSet z;

    // Componentwise inclusion.
    bool is_subpair_of(const AdmissiblePair& other) const {
        return x0.is_subset_of(other.x0) && z.is_subset_of(other.z);
    }

    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
    // Graded lexicographic: X0 first, then Z, both in canonical set order.
    friend std::strong_ordering operator<=>(const AdmissiblePair& a, const AdmissiblePair& b) {
        if (auto c = a.x0 <=> b.x0; c != 0) return c;
        return a.z <=> b.z;
    }
};

// Finite poset of admissible pairs. `pair_covers` holds (i, j) whenever
// pairs[i] is covered by pairs[j] in componentwise order. The ideal order is
// the reverse: `ideal_covers` holds (j, i) for the same cover, meaning the
// ideal of pairs[j] is covered by the ideal of pairs[i].
struct IdealLattice {
    std::vector<AdmissiblePair> pairs;
    std::vector<std::pair<std::size_t, std::size_t>> pair_covers;
    std::vector<std::pair<std::size_t, std::size_t>> ideal_covers;

    std::size_t index_of(const AdmissiblePair& p) const; // throws std::out_of_range
    std::size_t bottom() const; // (∅, ∅): the whole algebra
    std::size_t top() const;    // (E0, E0_sg): the zero ideal
};

bool is_admissible(const DiscreteGraph& graph, const VertexSet& x0, const VertexSet& z);
inline bool is_admissible(const DiscreteGraph& graph, const AdmissiblePair& p) {
    return is_admissible(graph, p.x0, p.z);
}

// Componentwise union, re-checked for admissibility (std::logic_error if it
// ever fails). Corresponds to the intersection of the two ideals.
AdmissiblePair pair_union(const DiscreteGraph& graph, const AdmissiblePair& a, const AdmissiblePair& b);

// Every admissible pair: for each invariant X0, every Z between X0_sg and
// E0_sg & X0.
IdealLattice enumerate_admissible_pairs(const DiscreteGraph& graph,
                                        std::size_t max_vertices = kDefaultMaxVertices);

// Row-finite graphs only (PreconditionError otherwise): true iff every
// invariant X0 admits exactly one Z.
bool row_finite_bijection_check(const DiscreteGraph& graph,
                                std::size_t max_vertices = kDefaultMaxVertices);

// The pair of the ideal generated by the vertex projections of V:
// (E0 \ S(H(V)), E0_sg \ S(H(V))).
AdmissiblePair ideal_generated_by(const DiscreteGraph& graph, const VertexSet& v);

// E_rho. `copies` maps each vertex of Y_rho = Z & X0_rg (parent indexing)
// to the id of its duplicate "<id>#copy" in `base`.
struct QuotientGraph {
    DiscreteGraph base;
    std::map<VertexIndex, std::string> copies;
};

QuotientGraph quotient_graph(const DiscreteGraph& graph, const AdmissiblePair& rho);

// F = (F0, r^{-1}(F0)) for a hereditary F0, together with the pair of the
// ideal F0 generates. The corner of O(E) over F is Morita equivalent to that
// ideal; this is reported, not computed.
struct HereditarySubgraph {
    DiscreteGraph subgraph;
    AdmissiblePair generated;
    std::string note;
};

HereditarySubgraph hereditary_subgraph(const DiscreteGraph& graph, const VertexSet& f0);

std::string copy_name(const std::string& id);

} // namespace gcalg
