#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gcalg/lattice.hpp"
#include "gcalg/orbits.hpp"

namespace gcalg {

// Evidence attached to a verdict. Each field is independently re-checkable
// with the predicate that produced it.
struct Witness {
    std::vector<Path> loops;
    std::vector<VertexIndex> vertices;
    std::vector<VertexSet> sets;
    std::vector<NegativeOrbit> orbits;
    std::string note;
};

struct Verdict {
    std::string predicate;
    bool value = false;
    Witness witness;
};

// Discrete case: a set has empty interior iff it is empty, so E is
// topologically free iff no loop without entrances exists. Witness: such a
// loop.
Verdict is_topologically_free(const DiscreteGraph& graph);

// Per(E) empty. Witness: a periodic point and its loop.
Verdict is_free(const DiscreteGraph& graph);

// S(H({v})) = E0 for every vertex v. Witness: a failing v and the proper
// invariant set E0 \ S(H({v})).
Verdict is_minimal(const DiscreteGraph& graph);

// H({v1}) & H({v2}) nonempty for all v1, v2. Witness: a pair without
// common ancestor.
Verdict is_topologically_transitive(const DiscreteGraph& graph);

// Some v0 in Per(E) has Orb+(v0) = S(H({v0})) = E0. Witness: the loop.
Verdict is_generated_by_loop(const DiscreteGraph& graph);

// Minimal and topologically free. The witness note records the two
// equivalent forms (minimal and free; minimal and not generated by a loop)
// and which conjunct failed. std::logic_error if the three forms disagree.
Verdict is_simple(const DiscreteGraph& graph);

// Topologically free and topologically transitive.
Verdict is_prime_algebra(const DiscreteGraph& graph);

struct TransitivityForms {
    bool common_ancestors = false;      // H(V1) & H(V2) nonempty
    bool saturated_intersect = false;   // S(H(V1)) & S(H(V2)) nonempty
    bool top_pair_prime = false;        // (E0, E0_sg) is a prime pair
    bool whole_space_head = false;      // E0 is a maximal head
    std::optional<NegativeOrbit> dense_orbit; // Orb(v, e) = E0
};

// Every equivalent form of topological transitivity, each computed on its
// own route. max_stem defaults to |E0|.
TransitivityForms transitivity_forms(const DiscreteGraph& graph,
                                     std::size_t max_vertices = kDefaultMaxVertices,
                                     std::optional<std::size_t> max_stem = std::nullopt);

// rho_v = (Orb+(v), X_sg | {v}) for v in BV(E), and rho_X0 = (X0, X0_sg) for
// each maximal head X0. Canonical order.
std::vector<AdmissiblePair> prime_admissible_pairs(const DiscreteGraph& graph,
                                                   std::size_t max_vertices = kDefaultMaxVertices);

struct BreakingVertexPrime {
    VertexIndex vertex;
};
struct AperiodicHeadPrime {
    VertexSet x0;
};
// One-parameter family P_{[v],w}, w on the circle. The gauge action moves w
// and fixes each member exactly for z with z^period = 1.
struct CircleFamilyPrime {
    PeriodicClass periodic_class;
};

using PrimeIdealDescriptor = std::variant<BreakingVertexPrime, AperiodicHeadPrime, CircleFamilyPrime>;

std::vector<PrimeIdealDescriptor> prime_ideals(const DiscreteGraph& graph,
                                               std::size_t max_vertices = kDefaultMaxVertices);

// The admissible pair of the gauge-invariant part of a prime ideal: rho_v,
// rho_X0, or rho_{Orb+(v)} for a circle family.
AdmissiblePair underlying_pair(const DiscreteGraph& graph, const PrimeIdealDescriptor& prime);

std::string variant_tag(const PrimeIdealDescriptor& prime);

struct PrimitivityReport {
    // Finite vertex sets are second countable: every prime ideal is
    // primitive and M'(E) = M(E).
    bool second_countable = true;
    std::vector<PrimeIdealDescriptor> primitive_ideals;
    // (i): topologically free and E0 = Orb(v, e) for some negative orbit.
    bool free_with_dense_orbit = false;
    std::optional<NegativeOrbit> dense_orbit;
    // (iii): topologically free and topologically transitive.
    bool free_and_transitive = false;
    // (ii): O(E) primitive. Equal to (i) and (iii) here.
    bool algebra_primitive = false;
    std::string note;
};

PrimitivityReport primitivity_report(const DiscreteGraph& graph,
                                     std::size_t max_vertices = kDefaultMaxVertices,
                                     std::optional<std::size_t> max_stem = std::nullopt);

} // namespace gcalg
