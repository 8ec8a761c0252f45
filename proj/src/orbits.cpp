#include "gcalg/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcalg {

VertexSet positive_orbit(const DiscreteGraph& graph, VertexIndex v) {
    VertexSet out(graph.vertex_count());
    out.insert(v);
    std::vector<VertexIndex> stack{v};
    while (!stack.empty()) {
        const VertexIndex w = stack.back();
        stack.pop_back();
        for (EdgeIndex e : graph.out_edges(w)) {
            const VertexIndex r = graph.edge(e).range;
            if (!out.contains(r)) {
                out.insert(r);
                stack.push_back(r);
            }
        }
    }
    return out;
}

namespace {

Path backward_path(const DiscreteGraph& graph, VertexIndex head,
                   const std::vector<EdgeIndex>& edges, std::size_t from, std::size_t to) {
    if (from == to) return Path::vertex(head);
    return Path::from_edges(graph, std::vector<EdgeIndex>(edges.begin() + static_cast<std::ptrdiff_t>(from),
                                                          edges.begin() + static_cast<std::ptrdiff_t>(to)));
}

bool orbit_less(const NegativeOrbit& a, const NegativeOrbit& b) {
    if (a.is_finite() != b.is_finite()) return a.is_finite();
    if (a.is_finite()) return path_less(a.finite_path(), b.finite_path());
    const Lasso& la = a.lasso();
    const Lasso& lb = b.lasso();
    if (la.stem != lb.stem) return path_less(la.stem, lb.stem);
    return path_less(la.cycle, lb.cycle);
}

} // namespace

std::vector<NegativeOrbit> negative_orbits(const DiscreteGraph& graph, VertexIndex v,
                                           std::size_t max_stem) {
    const VertexSet singular = classify_vertices(graph).singular;
    std::vector<NegativeOrbit> out;
    // visited[i] is x_i, edges[i] is the edge with range x_i and domain
    // x_{i+1}; so edges is (e_1, e_2, ...) of the orbit.
    std::vector<VertexIndex> visited{v};
    std::vector<EdgeIndex> edges;

    auto walk = [&](auto&& self) -> void {
        const VertexIndex at = visited.back();
        if (singular.contains(at) && edges.size() <= max_stem)
            out.push_back(NegativeOrbit{v, backward_path(graph, v, edges, 0, edges.size())});
        for (EdgeIndex e : graph.in_edges(at)) {
            const VertexIndex d = graph.edge(e).domain;
            const auto seen = std::find(visited.begin(), visited.end(), d);
            if (seen != visited.end()) {
                const auto j = static_cast<std::size_t>(seen - visited.begin());
                if (j > max_stem) continue;
                std::vector<EdgeIndex> cycle(edges.begin() + static_cast<std::ptrdiff_t>(j), edges.end());
                cycle.push_back(e);
                out.push_back(NegativeOrbit{
                    v, Lasso{backward_path(graph, v, edges, 0, j), Path::from_edges(graph, std::move(cycle))}});
                continue;
            }
            visited.push_back(d);
            edges.push_back(e);
            self(self);
            edges.pop_back();
            visited.pop_back();
        }
    };
    walk(walk);
    std::sort(out.begin(), out.end(), orbit_less);
    return out;
}

VertexSet orbit_space(const DiscreteGraph& graph, const NegativeOrbit& orbit) {
    VertexSet out(graph.vertex_count());
    auto add_path = [&](const Path& p) {
        out |= positive_orbit(graph, p.range());
        for (EdgeIndex e : p.edges) out |= positive_orbit(graph, graph.edge(e).domain);
    };
    if (orbit.is_finite()) {
        add_path(orbit.finite_path());
    } else {
        add_path(orbit.lasso().stem);
        add_path(orbit.lasso().cycle);
    }
    return out;
}

bool is_maximal_head(const DiscreteGraph& graph, const VertexSet& x0) {
    if (x0.empty() || !is_invariant(graph, x0)) return false;
    const auto members = x0.members();
    std::vector<VertexSet> ancestors;
    ancestors.reserve(members.size());
    for (VertexIndex v : members)
        ancestors.push_back(hereditary_closure(graph, VertexSet(graph.vertex_count(), {v})) & x0);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!ancestors[i].intersects(ancestors[j])) return false;
    return true;
}

bool is_join_irreducible(const VertexSet& x0, const std::vector<VertexSet>& invariant_sets) {
    if (x0.empty()) return false;
    for (const VertexSet& a : invariant_sets) {
        if (x0.is_subset_of(a)) continue;
        for (const VertexSet& b : invariant_sets) {
            if (x0.is_subset_of(b)) continue;
            if (x0.is_subset_of(a | b)) return false;
        }
    }
    return true;
}

std::optional<Path> periodic_loop(const DiscreteGraph& graph, VertexIndex v) {
    const VertexSet orbit = positive_orbit(graph, v);
    for (const Path& loop : simple_loops_at(graph, v)) {
        bool ok = true;
        for (EdgeIndex lk : loop.edges) {
            // A multiplicity above 1 means parallel copies of l_k enter r(l_k).
            if (graph.edge(lk).multiplicity != Multiplicity::finite(1)) ok = false;
            for (EdgeIndex e : graph.in_edges(graph.edge(lk).range))
                if (e != lk && orbit.contains(graph.edge(e).domain)) ok = false;
        }
        // Isolation of v in Orb+(v) is automatic for discrete vertex sets.
        const bool isolated = true;
        if (ok && isolated) return loop;
    }
    return std::nullopt;
}

std::map<VertexIndex, std::size_t> periodic_points(const DiscreteGraph& graph) {
    std::map<VertexIndex, std::size_t> out;
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v)
        if (auto loop = periodic_loop(graph, v)) out.emplace(v, loop->length());
    return out;
}

VertexSet aperiodic_points(const DiscreteGraph& graph) {
    VertexSet out = graph.all_vertices();
    for (const auto& [v, period] : periodic_points(graph)) out.erase(v);
    return out;
}

std::vector<PeriodicClass> periodic_classes(const DiscreteGraph& graph) {
    std::vector<PeriodicClass> out;
    VertexSet assigned = graph.empty_set();
    const auto per = periodic_points(graph);
    for (const auto& [v, period] : per) {
        if (assigned.contains(v)) continue;
        const VertexSet orbit = positive_orbit(graph, v);
        VertexSet cls = graph.empty_set();
        for (const auto& [w, pw] : per)
            if (positive_orbit(graph, w) == orbit) cls.insert(w);
        const Path loop = *periodic_loop(graph, v);
        VertexSet on_loop = graph.empty_set();
        for (EdgeIndex e : loop.edges) on_loop.insert(graph.edge(e).domain);
        if (cls != on_loop || cls.count() != period)
            throw std::logic_error("periodic_classes: class does not match its loop");
        out.push_back(PeriodicClass{cls, loop, period});
        assigned |= cls;
    }
    return out;
}

std::vector<MaximalHead> maximal_heads(const DiscreteGraph& graph, std::size_t max_vertices) {
    const auto family = enumerate_invariant_sets(graph, max_vertices);
    const auto per = periodic_points(graph);
    std::vector<MaximalHead> out;
    for (const VertexSet& x : family) {
        const bool head = is_maximal_head(graph, x);
        if (head != is_join_irreducible(x, family))
            throw std::logic_error("maximal_heads: definitional test and join-irreducibility disagree");
        if (!head) continue;
        MaximalHead mh{x, std::nullopt};
        for (const auto& [v, period] : per)
            if (positive_orbit(graph, v) == x) {
                mh.periodic_witness = v;
                break;
            }
        out.push_back(std::move(mh));
    }
    return out;
}

HeadSplit split_heads(const DiscreteGraph& graph, std::size_t max_vertices) {
    HeadSplit split;
    for (MaximalHead& h : maximal_heads(graph, max_vertices))
        (h.is_periodic() ? split.periodic : split.aperiodic).push_back(std::move(h));
    return split;
}

VertexSet breaking_vertices(const DiscreteGraph& graph) {
    const VertexSet singular = classify_vertices(graph).singular;
    VertexSet out = graph.empty_set();
    singular.for_each([&](VertexIndex v) {
        if (restricted_regular(graph, positive_orbit(graph, v)).contains(v)) out.insert(v);
    });
    return out;
}

} // namespace gcalg
