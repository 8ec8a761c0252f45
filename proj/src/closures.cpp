#include "gcalg/closures.hpp"

#include <algorithm>
#include <cstdint>

#include "gcalg/errors.hpp"

namespace gcalg {

bool is_positively_invariant(const DiscreteGraph& graph, const VertexSet& x) {
    return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const EdgeClass& e) {
        return !x.contains(e.domain) || x.contains(e.range);
    });
}

bool is_negatively_invariant(const DiscreteGraph& graph, const VertexSet& x) {
    const VertexSet regular = classify_vertices(graph).regular;
    bool ok = true;
    (x & regular).for_each([&](VertexIndex v) {
        const auto& in = graph.in_edges(v);
        ok = ok && std::any_of(in.begin(), in.end(),
                               [&](EdgeIndex e) { return x.contains(graph.edge(e).domain); });
    });
    return ok;
}

bool is_invariant(const DiscreteGraph& graph, const VertexSet& x) {
    return is_positively_invariant(graph, x) && is_negatively_invariant(graph, x);
}

bool is_hereditary(const DiscreteGraph& graph, const VertexSet& v) {
    return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const EdgeClass& e) {
        return !v.contains(e.range) || v.contains(e.domain);
    });
}

bool is_saturated(const DiscreteGraph& graph, const VertexSet& v) {
    const VertexSet regular = classify_vertices(graph).regular;
    bool ok = true;
    (regular - v).for_each([&](VertexIndex w) {
        const auto& in = graph.in_edges(w);
        if (std::all_of(in.begin(), in.end(),
                        [&](EdgeIndex e) { return v.contains(graph.edge(e).domain); }))
            ok = false;
    });
    return ok;
}

VertexSet hereditary_closure(const DiscreteGraph& graph, const VertexSet& v) {
    VertexSet out = v;
    std::vector<VertexIndex> stack = v.members();
    while (!stack.empty()) {
        const VertexIndex w = stack.back();
        stack.pop_back();
        for (EdgeIndex e : graph.in_edges(w)) {
            const VertexIndex d = graph.edge(e).domain;
            if (!out.contains(d)) {
                out.insert(d);
                stack.push_back(d);
            }
        }
    }
    return out;
}

VertexSet saturated_closure(const DiscreteGraph& graph, const VertexSet& v) {
    const VertexSet regular = classify_vertices(graph).regular;
    VertexSet current = v;
    for (;;) {
        VertexSet next = current;
        (regular - current).for_each([&](VertexIndex w) {
            const auto& in = graph.in_edges(w);
            if (std::all_of(in.begin(), in.end(),
                            [&](EdgeIndex e) { return current.contains(graph.edge(e).domain); }))
                next.insert(w);
        });
        if (next == current) return current;
        current = std::move(next);
    }
}

VertexSet largest_invariant_avoiding(const DiscreteGraph& graph, const VertexSet& v) {
    return saturated_closure(graph, hereditary_closure(graph, v)).complement();
}

std::vector<VertexSet> enumerate_invariant_sets(const DiscreteGraph& graph, std::size_t max_vertices) {
    const std::size_t n = graph.vertex_count();
    if (n > max_vertices || n > 64)
        throw BoundExceeded("invariant-set enumeration: graph has " + std::to_string(n) +
                                " vertices, bound is " + std::to_string(std::min<std::size_t>(max_vertices, 64)),
                            "--max-vertices");

    std::vector<std::uint64_t> succ(n, 0);
    for (const EdgeClass& e : graph.edges()) succ[e.domain] |= std::uint64_t{1} << e.range;

    std::vector<VertexSet> out;
    // Decide vertices in index order. `forced` collects ranges of edges leaving
    // included vertices; a forced vertex cannot be excluded and an included
    // vertex cannot reach an excluded one.
    auto walk = [&](auto&& self, std::size_t i, std::uint64_t included, std::uint64_t excluded,
                    std::uint64_t forced) -> void {
        if (i == n) {
            VertexSet x = VertexSet::from_mask(n, included);
            if (is_negatively_invariant(graph, x)) out.push_back(std::move(x));
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(forced & bit)) self(self, i + 1, included, excluded | bit, forced);
        if (!(succ[i] & excluded)) self(self, i + 1, included | bit, excluded, forced | succ[i]);
    };
    walk(walk, 0, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gcalg
