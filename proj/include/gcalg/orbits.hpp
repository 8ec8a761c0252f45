#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "gcalg/closures.hpp"
#include "gcalg/graph.hpp"

namespace gcalg {

// A negative orbit of `head`: either a finite path with range `head` whose
// domain is singular, or an eventually periodic backward walk (Lasso) whose
// stem has range `head`.
struct NegativeOrbit {
    VertexIndex head = 0;
    std::variant<Path, Lasso> walk;

    bool is_finite() const noexcept { return std::holds_alternative<Path>(walk); }
    const Path& finite_path() const { return std::get<Path>(walk); }
    const Lasso& lasso() const { return std::get<Lasso>(walk); }

    friend bool operator==(const NegativeOrbit&, const NegativeOrbit&) = default;
};

struct MaximalHead {
    VertexSet x0;
    // Set when x0 = Orb+(v) for a periodic point v; holds the smallest such v.
    std::optional<VertexIndex> periodic_witness;

    bool is_periodic() const noexcept { return periodic_witness.has_value(); }
};

struct PeriodicClass {
    VertexSet representatives; // {d(l_1), ..., d(l_n)}
    Path loop;                 // based at the smallest representative
    std::size_t period = 0;
};

// Orb+(v): ranges of all paths with domain v, v included.
VertexSet positive_orbit(const DiscreteGraph& graph, VertexIndex v);

// Simple-form negative orbits of v: backward walks that never revisit a
// vertex except to close one simple cycle. Finite orbits stop at a singular
// vertex; lassos have stem length <= max_stem. Every orbit space of v is the
// orbit space of one of these (see orbit_space).
std::vector<NegativeOrbit> negative_orbits(const DiscreteGraph& graph, VertexIndex v,
                                           std::size_t max_stem);

// Orb(v, e): union of Orb+ over the vertices visited by the orbit.
VertexSet orbit_space(const DiscreteGraph& graph, const NegativeOrbit& orbit);

// Definitional test: X0 nonempty, invariant, and any two members have a
// common ancestor inside X0.
bool is_maximal_head(const DiscreteGraph& graph, const VertexSet& x0);

// Nonempty X0 such that X0 within X1 | X2 forces X0 within X1 or X2, for
// X1, X2 ranging over `invariant_sets`.
bool is_join_irreducible(const VertexSet& x0, const std::vector<VertexSet>& invariant_sets);

// Per(E): vertex -> period. Condition (iii) of the periodicity definition
// (isolation in Orb+) holds automatically for discrete vertex sets.
std::map<VertexIndex, std::size_t> periodic_points(const DiscreteGraph& graph);
VertexSet aperiodic_points(const DiscreteGraph& graph);

// The simple loop witnessing v in Per(E), if any.
std::optional<Path> periodic_loop(const DiscreteGraph& graph, VertexIndex v);

std::vector<PeriodicClass> periodic_classes(const DiscreteGraph& graph);

std::vector<MaximalHead> maximal_heads(const DiscreteGraph& graph,
                                       std::size_t max_vertices = kDefaultMaxVertices);

struct HeadSplit {
    std::vector<MaximalHead> periodic;
    std::vector<MaximalHead> aperiodic;
};
HeadSplit split_heads(const DiscreteGraph& graph, std::size_t max_vertices = kDefaultMaxVertices);

// BV(E): singular vertices that are regular in the graph restricted to
// Orb+(v).
VertexSet breaking_vertices(const DiscreteGraph& graph);

} // namespace gcalg
