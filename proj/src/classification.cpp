#include "gcalg/classification.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcalg {

namespace {

VertexSet singleton(const DiscreteGraph& graph, VertexIndex v) {
    return VertexSet(graph.vertex_count(), {v});
}

VertexSet sh_closure(const DiscreteGraph& graph, VertexIndex v) {
    return saturated_closure(graph, hereditary_closure(graph, singleton(graph, v)));
}

// Definitional primality of lattice.pairs[idx]: whenever the union of two
// pairs contains it, one of them already does. (∅, ∅) is the whole algebra
// and never prime.
bool is_prime_pair(const IdealLattice& lattice, std::size_t idx) {
    const AdmissiblePair& rho = lattice.pairs[idx];
    if (rho.x0.empty()) return false;
    std::vector<const AdmissiblePair*> missing;
    for (const AdmissiblePair& p : lattice.pairs)
        if (!rho.is_subpair_of(p)) missing.push_back(&p);
    for (std::size_t i = 0; i < missing.size(); ++i)
        for (std::size_t j = i; j < missing.size(); ++j)
            if (rho.x0.is_subset_of(missing[i]->x0 | missing[j]->x0) &&
                rho.z.is_subset_of(missing[i]->z | missing[j]->z))
                return false;
    return true;
}

std::optional<NegativeOrbit> find_dense_orbit(const DiscreteGraph& graph, std::size_t max_stem) {
    const VertexSet all = graph.all_vertices();
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v)
        for (NegativeOrbit& orbit : negative_orbits(graph, v, max_stem))
            if (orbit_space(graph, orbit) == all) return std::move(orbit);
    return std::nullopt;
}

} // namespace

Verdict is_topologically_free(const DiscreteGraph& graph) {
    Verdict verdict{"topologically_free", true, {}};
    for (const Path& loop : simple_loops(graph)) {
        if (loop_without_entrances(graph, loop)) {
            verdict.value = false;
            verdict.witness.loops.push_back(loop);
            verdict.witness.note = "loop without entrances";
            break;
        }
    }
    return verdict;
}

Verdict is_free(const DiscreteGraph& graph) {
    Verdict verdict{"free", true, {}};
    const auto per = periodic_points(graph);
    if (!per.empty()) {
        const VertexIndex v = per.begin()->first;
        verdict.value = false;
        verdict.witness.vertices.push_back(v);
        verdict.witness.loops.push_back(*periodic_loop(graph, v));
        verdict.witness.note = "periodic point";
    }
    return verdict;
}

Verdict is_minimal(const DiscreteGraph& graph) {
    Verdict verdict{"minimal", true, {}};
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
        const VertexSet closed = sh_closure(graph, v);
        if (closed != graph.all_vertices()) {
            verdict.value = false;
            verdict.witness.vertices.push_back(v);
            verdict.witness.sets.push_back(closed.complement());
            verdict.witness.note = "proper nonempty invariant set";
            break;
        }
    }
    return verdict;
}

Verdict is_topologically_transitive(const DiscreteGraph& graph) {
    Verdict verdict{"topologically_transitive", true, {}};
    const std::size_t n = graph.vertex_count();
    if (n == 0) {
        verdict.value = false;
        verdict.witness.note = "empty graph";
        return verdict;
    }
    std::vector<VertexSet> ancestors;
    for (VertexIndex v = 0; v < n; ++v) ancestors.push_back(hereditary_closure(graph, singleton(graph, v)));
    for (VertexIndex a = 0; a < n && verdict.value; ++a)
        for (VertexIndex b = a + 1; b < n; ++b)
            if (!ancestors[a].intersects(ancestors[b])) {
                verdict.value = false;
                verdict.witness.vertices = {a, b};
                verdict.witness.note = "no common ancestor";
                break;
            }
    return verdict;
}

Verdict is_generated_by_loop(const DiscreteGraph& graph) {
    Verdict verdict{"generated_by_loop", false, {}};
    const VertexSet all = graph.all_vertices();
    for (const auto& [v, period] : periodic_points(graph)) {
        if (positive_orbit(graph, v) == all && sh_closure(graph, v) == all) {
            verdict.value = true;
            verdict.witness.vertices.push_back(v);
            verdict.witness.loops.push_back(*periodic_loop(graph, v));
            verdict.witness.note = "every negative orbit ends in this loop";
            break;
        }
    }
    return verdict;
}

Verdict is_simple(const DiscreteGraph& graph) {
    const Verdict minimal = is_minimal(graph);
    const Verdict topo_free = is_topologically_free(graph);
    const Verdict free = is_free(graph);
    const Verdict by_loop = is_generated_by_loop(graph);

    const bool form_top_free = minimal.value && topo_free.value;
    const bool form_free = minimal.value && free.value;
    const bool form_not_loop = minimal.value && !by_loop.value;
    if (form_top_free != form_free || form_free != form_not_loop)
        throw std::logic_error("is_simple: equivalent simplicity conditions disagree");

    Verdict verdict{"simple", form_top_free, {}};
    if (!minimal.value) {
        verdict.witness = minimal.witness;
        verdict.witness.note = "not minimal";
    } else if (by_loop.value) {
        verdict.witness = by_loop.witness;
        verdict.witness.note = "generated by a loop";
    } else if (!topo_free.value) {
        verdict.witness = topo_free.witness;
        verdict.witness.note = "not topologically free";
    }
    return verdict;
}

Verdict is_prime_algebra(const DiscreteGraph& graph) {
    const Verdict topo_free = is_topologically_free(graph);
    const Verdict transitive = is_topologically_transitive(graph);
    Verdict verdict{"prime", topo_free.value && transitive.value, {}};
    if (!topo_free.value) {
        verdict.witness = topo_free.witness;
        verdict.witness.note = "not topologically free";
    } else if (!transitive.value) {
        verdict.witness = transitive.witness;
        verdict.witness.note = "not topologically transitive";
    }
    return verdict;
}

TransitivityForms transitivity_forms(const DiscreteGraph& graph, std::size_t max_vertices,
                                     std::optional<std::size_t> max_stem) {
    TransitivityForms forms;
    forms.common_ancestors = is_topologically_transitive(graph).value;

    const std::size_t n = graph.vertex_count();
    std::vector<VertexSet> closed;
    for (VertexIndex v = 0; v < n; ++v) closed.push_back(sh_closure(graph, v));
    // Nonempty open sets exist only when E0 does.
    forms.saturated_intersect = n > 0;
    for (VertexIndex a = 0; a < n; ++a)
        for (VertexIndex b = a + 1; b < n; ++b)
            if (!closed[a].intersects(closed[b])) forms.saturated_intersect = false;

    const IdealLattice lattice = enumerate_admissible_pairs(graph, max_vertices);
    const AdmissiblePair top{graph.all_vertices(), classify_vertices(graph).singular};
    forms.top_pair_prime = is_prime_pair(lattice, lattice.index_of(top));
    forms.whole_space_head = is_maximal_head(graph, graph.all_vertices());
    forms.dense_orbit = find_dense_orbit(graph, max_stem.value_or(n));
    return forms;
}

std::vector<AdmissiblePair> prime_admissible_pairs(const DiscreteGraph& graph, std::size_t max_vertices) {
    std::vector<AdmissiblePair> out;
    breaking_vertices(graph).for_each([&](VertexIndex v) {
        const VertexSet x0 = positive_orbit(graph, v);
        VertexSet z = restricted_singular(graph, x0);
        z.insert(v);
        out.push_back(AdmissiblePair{x0, z});
    });
    for (const MaximalHead& head : maximal_heads(graph, max_vertices))
        out.push_back(AdmissiblePair{head.x0, restricted_singular(graph, head.x0)});
    for (const AdmissiblePair& p : out)
        if (!is_admissible(graph, p)) throw std::logic_error("prime_admissible_pairs: pair not admissible");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimeIdealDescriptor> prime_ideals(const DiscreteGraph& graph, std::size_t max_vertices) {
    std::vector<PrimeIdealDescriptor> out;
    breaking_vertices(graph).for_each([&](VertexIndex v) { out.emplace_back(BreakingVertexPrime{v}); });
    for (MaximalHead& head : split_heads(graph, max_vertices).aperiodic)
        out.emplace_back(AperiodicHeadPrime{std::move(head.x0)});
    for (PeriodicClass& cls : periodic_classes(graph)) out.emplace_back(CircleFamilyPrime{std::move(cls)});
    return out;
}

AdmissiblePair underlying_pair(const DiscreteGraph& graph, const PrimeIdealDescriptor& prime) {
    struct Visitor {
        const DiscreteGraph& graph;
        AdmissiblePair operator()(const BreakingVertexPrime& p) const {
            const VertexSet x0 = positive_orbit(graph, p.vertex);
            VertexSet z = restricted_singular(graph, x0);
            z.insert(p.vertex);
            return {x0, z};
        }
        AdmissiblePair operator()(const AperiodicHeadPrime& p) const {
            return {p.x0, restricted_singular(graph, p.x0)};
        }
        AdmissiblePair operator()(const CircleFamilyPrime& p) const {
            const VertexIndex v = p.periodic_class.representatives.members().front();
            const VertexSet x0 = positive_orbit(graph, v);
            return {x0, restricted_singular(graph, x0)};
        }
    };
    return std::visit(Visitor{graph}, prime);
}

std::string variant_tag(const PrimeIdealDescriptor& prime) {
    switch (prime.index()) {
    case 0: return "breaking_vertex";
    case 1: return "aperiodic_head";
    default: return "circle_family";
    }
}

PrimitivityReport primitivity_report(const DiscreteGraph& graph, std::size_t max_vertices,
                                     std::optional<std::size_t> max_stem) {
    PrimitivityReport report;
    report.primitive_ideals = prime_ideals(graph, max_vertices);
    const bool topo_free = is_topologically_free(graph).value;
    report.dense_orbit = find_dense_orbit(graph, max_stem.value_or(graph.vertex_count()));
    report.free_with_dense_orbit = topo_free && report.dense_orbit.has_value();
    report.free_and_transitive = topo_free && is_topologically_transitive(graph).value;
    if (report.free_with_dense_orbit != report.free_and_transitive)
        throw std::logic_error("primitivity_report: conditions (i) and (iii) disagree on a finite graph");
    report.algebra_primitive = report.free_with_dense_orbit;
    report.note =
        "finite vertex sets are second countable: M'(E) = M(E), every prime ideal is primitive, and "
        "the undetermined class of aperiodic heads outside M'(E) is empty";
    return report;
}

} // namespace gcalg
