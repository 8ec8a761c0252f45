#include "gcalg/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcalg/errors.hpp"

namespace gcalg {

std::string copy_name(const std::string& id) { return id + "#copy"; }

std::size_t IdealLattice::index_of(const AdmissiblePair& p) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p) throw std::out_of_range("IdealLattice: pair not in lattice");
    return static_cast<std::size_t>(it - pairs.begin());
}

std::size_t IdealLattice::bottom() const {
    if (pairs.empty()) throw std::out_of_range("IdealLattice: empty");
    return 0;
}

std::size_t IdealLattice::top() const {
    if (pairs.empty()) throw std::out_of_range("IdealLattice: empty");
    return pairs.size() - 1;
}

bool is_admissible(const DiscreteGraph& graph, const VertexSet& x0, const VertexSet& z) {
    if (!is_invariant(graph, x0)) return false;
    const VertexSet lower = restricted_singular(graph, x0);
    const VertexSet upper = classify_vertices(graph).singular & x0;
    return lower.is_subset_of(z) && z.is_subset_of(upper);
}

AdmissiblePair pair_union(const DiscreteGraph& graph, const AdmissiblePair& a, const AdmissiblePair& b) {
    AdmissiblePair u{a.x0 | b.x0, a.z | b.z};
    if (!is_admissible(graph, u)) throw std::logic_error("pair_union: union is not admissible");
    return u;
}

IdealLattice enumerate_admissible_pairs(const DiscreteGraph& graph, std::size_t max_vertices) {
    const VertexSet singular = classify_vertices(graph).singular;
    IdealLattice lattice;
    for (const VertexSet& x0 : enumerate_invariant_sets(graph, max_vertices)) {
        const VertexSet lower = restricted_singular(graph, x0);
        const auto gap = ((singular & x0) - lower).members();
        if (gap.size() >= 20)
            throw BoundExceeded("admissible-pair enumeration: 2^" + std::to_string(gap.size()) +
                                    " choices of Z for one invariant set",
                                "--max-vertices");
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << gap.size()); ++choice) {
            VertexSet z = lower;
            for (std::size_t i = 0; i < gap.size(); ++i)
                if ((choice >> i) & 1U) z.insert(gap[i]);
            AdmissiblePair p{x0, std::move(z)};
            if (!is_admissible(graph, p))
                throw std::logic_error("enumerate_admissible_pairs: generated pair is not admissible");
            lattice.pairs.push_back(std::move(p));
        }
    }
    std::sort(lattice.pairs.begin(), lattice.pairs.end());

    const std::size_t n = lattice.pairs.size();
    constexpr std::size_t kMaxHasse = 4096;
    if (n > kMaxHasse)
        throw BoundExceeded("Hasse diagram: " + std::to_string(n) + " admissible pairs exceed " +
                                std::to_string(kMaxHasse),
                            "--max-vertices");
    // above[i] lists j with pairs[i] a proper subpair of pairs[j].
    std::vector<std::vector<std::size_t>> above(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && lattice.pairs[i].is_subpair_of(lattice.pairs[j])) above[i].push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : above[i]) {
            const bool covered = std::none_of(above[i].begin(), above[i].end(), [&](std::size_t k) {
                return k != j && lattice.pairs[k].is_subpair_of(lattice.pairs[j]);
            });
            if (covered) {
                lattice.pair_covers.emplace_back(i, j);
                lattice.ideal_covers.emplace_back(j, i);
            }
        }
    }
    std::sort(lattice.pair_covers.begin(), lattice.pair_covers.end());
    std::sort(lattice.ideal_covers.begin(), lattice.ideal_covers.end());
    return lattice;
}

bool row_finite_bijection_check(const DiscreteGraph& graph, std::size_t max_vertices) {
    if (!is_row_finite(graph))
        throw PreconditionError("row_finite_bijection_check: graph is not row-finite");
    const VertexSet singular = classify_vertices(graph).singular;
    for (const VertexSet& x0 : enumerate_invariant_sets(graph, max_vertices))
        if (restricted_singular(graph, x0) != (singular & x0)) return false;
    return true;
}

AdmissiblePair ideal_generated_by(const DiscreteGraph& graph, const VertexSet& v) {
    const VertexSet closed = saturated_closure(graph, hereditary_closure(graph, v));
    const VertexSet singular = classify_vertices(graph).singular;
    return AdmissiblePair{closed.complement(), singular - closed};
}

QuotientGraph quotient_graph(const DiscreteGraph& graph, const AdmissiblePair& rho) {
    if (!is_admissible(graph, rho)) throw PreconditionError("quotient_graph: pair is not admissible");
    const VertexSet y = rho.z & restricted_regular(graph, rho.x0);

    QuotientGraph q;
    GraphSpec spec;
    rho.x0.for_each([&](VertexIndex v) { spec.vertices.push_back(graph.vertex_name(v)); });
    y.for_each([&](VertexIndex v) {
        q.copies.emplace(v, copy_name(graph.vertex_name(v)));
        spec.vertices.push_back(copy_name(graph.vertex_name(v)));
    });
    for (const EdgeClass& e : graph.edges()) {
        if (!rho.x0.contains(e.domain)) continue;
        spec.edges.push_back(EdgeSpec{e.id, graph.vertex_name(e.domain), graph.vertex_name(e.range),
                                      e.multiplicity});
        if (y.contains(e.domain))
            spec.edges.push_back(EdgeSpec{copy_name(e.id), copy_name(graph.vertex_name(e.domain)),
                                          graph.vertex_name(e.range), e.multiplicity});
    }
    q.base = DiscreteGraph::validate(spec);
    return q;
}

HereditarySubgraph hereditary_subgraph(const DiscreteGraph& graph, const VertexSet& f0) {
    if (!is_hereditary(graph, f0)) throw PreconditionError("hereditary_subgraph: set is not hereditary");
    GraphSpec spec;
    f0.for_each([&](VertexIndex v) { spec.vertices.push_back(graph.vertex_name(v)); });
    for (const EdgeClass& e : graph.edges())
        if (f0.contains(e.range))
            spec.edges.push_back(EdgeSpec{e.id, graph.vertex_name(e.domain), graph.vertex_name(e.range),
                                          e.multiplicity});
    return HereditarySubgraph{
        DiscreteGraph::validate(spec), ideal_generated_by(graph, f0),
        "O(F) embeds as a full hereditary subalgebra of the ideal generated by F0, so the two are "
        "Morita equivalent (reported, not verified computationally)"};
}

} // namespace gcalg
