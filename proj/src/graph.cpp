#include "gcalg/graph.hpp"

#include <algorithm>

#include "gcalg/errors.hpp"

namespace gcalg {

Multiplicity Multiplicity::operator*(const Multiplicity& other) const {
    if (omega_ || other.omega_) return omega();
    return finite(count_ * other.count_);
}

std::string Multiplicity::to_string() const { return omega_ ? "omega" : std::to_string(count_); }

DiscreteGraph DiscreteGraph::validate(const GraphSpec& spec) {
    DiscreteGraph g;
    g.vertices_ = spec.vertices;
    std::sort(g.vertices_.begin(), g.vertices_.end());
    if (auto dup = std::adjacent_find(g.vertices_.begin(), g.vertices_.end());
        dup != g.vertices_.end())
        throw GraphError(GraphErrorKind::duplicate_id, "duplicate vertex id \"" + *dup + "\"");

    std::vector<EdgeSpec> edges = spec.edges;
    std::sort(edges.begin(), edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].id == edges[i - 1].id)
            throw GraphError(GraphErrorKind::duplicate_id,
                             "duplicate edge id \"" + edges[i].id + "\"");

    auto lookup = [&](const std::string& edge, const std::string& name) {
        auto it = std::lower_bound(g.vertices_.begin(), g.vertices_.end(), name);
        if (it == g.vertices_.end() || *it != name)
            throw GraphError(GraphErrorKind::dangling_endpoint,
                             "dangling endpoint: edge \"" + edge + "\" references unknown vertex \"" +
                                 name + "\"");
        return static_cast<VertexIndex>(it - g.vertices_.begin());
    };

    g.in_.assign(g.vertices_.size(), {});
    g.out_.assign(g.vertices_.size(), {});
    for (const EdgeSpec& e : edges) {
        if (!e.multiplicity.is_omega() && e.multiplicity.count() == 0)
            throw GraphError(GraphErrorKind::zero_multiplicity,
                             "edge \"" + e.id + "\" has multiplicity 0");
        const VertexIndex d = lookup(e.id, e.domain);
        const VertexIndex r = lookup(e.id, e.range);
        const EdgeIndex idx = g.edges_.size();
        g.edges_.push_back(EdgeClass{e.id, d, r, e.multiplicity});
        g.out_[d].push_back(idx);
        g.in_[r].push_back(idx);
    }
    return g;
}

std::optional<VertexIndex> DiscreteGraph::find_vertex(const std::string& name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name) return std::nullopt;
    return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<EdgeIndex> DiscreteGraph::find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const EdgeClass& e, const std::string& key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) return std::nullopt;
    return static_cast<EdgeIndex>(it - edges_.begin());
}

GraphSpec DiscreteGraph::to_spec() const {
    GraphSpec spec;
    spec.vertices = vertices_;
    for (const EdgeClass& e : edges_)
        spec.edges.push_back(EdgeSpec{e.id, vertices_[e.domain], vertices_[e.range], e.multiplicity});
    return spec;
}

VertexClassification classify_vertices(const DiscreteGraph& graph) {
    const std::size_t n = graph.vertex_count();
    VertexClassification c{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (VertexIndex v = 0; v < n; ++v) {
        const auto& in = graph.in_edges(v);
        const bool omega = std::any_of(in.begin(), in.end(), [&](EdgeIndex e) {
            return graph.edge(e).multiplicity.is_omega();
        });
        if (in.empty()) c.sources.insert(v);
        if (omega) c.infinite_receivers.insert(v);
        else c.finite.insert(v);
        if (in.empty() || omega) c.singular.insert(v);
        else c.regular.insert(v);
    }
    return c;
}

VertexSet restricted_singular(const DiscreteGraph& graph, const VertexSet& x0) {
    VertexSet out(graph.vertex_count());
    x0.for_each([&](VertexIndex v) {
        bool receives = false;
        bool omega = false;
        for (EdgeIndex e : graph.in_edges(v)) {
            const EdgeClass& ec = graph.edge(e);
            if (!x0.contains(ec.domain)) continue;
            receives = true;
            omega = omega || ec.multiplicity.is_omega();
        }
        if (!receives || omega) out.insert(v);
    });
    return out;
}

VertexSet restricted_regular(const DiscreteGraph& graph, const VertexSet& x0) {
    return x0 - restricted_singular(graph, x0);
}

Path Path::from_edges(const DiscreteGraph& graph, std::vector<EdgeIndex> edges) {
    if (edges.empty()) throw PreconditionError("Path::from_edges: empty edge list");
    for (std::size_t k = 0; k + 1 < edges.size(); ++k)
        if (graph.edge(edges[k]).domain != graph.edge(edges[k + 1]).range)
            throw PreconditionError("Path::from_edges: edges \"" + graph.edge(edges[k]).id +
                                    "\" and \"" + graph.edge(edges[k + 1]).id +
                                    "\" do not compose");
    Path p;
    p.range_vertex = graph.edge(edges.front()).range;
    p.domain_vertex = graph.edge(edges.back()).domain;
    p.edges = std::move(edges);
    return p;
}

bool path_less(const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    if (a.edges != b.edges) return a.edges < b.edges;
    return std::pair(a.range_vertex, a.domain_vertex) < std::pair(b.range_vertex, b.domain_vertex);
}

Multiplicity path_multiplicity(const DiscreteGraph& graph, const Path& path) {
    Multiplicity m = Multiplicity::finite(1);
    for (EdgeIndex e : path.edges) m = m * graph.edge(e).multiplicity;
    return m;
}

std::vector<Path> paths_between(const DiscreteGraph& graph, VertexIndex from, VertexIndex to,
                                std::size_t max_len) {
    std::vector<Path> out;
    std::vector<EdgeIndex> flow; // traversal order: en first
    auto dfs = [&](auto&& self, VertexIndex at) -> void {
        if (at == to) {
            Path p;
            p.domain_vertex = from;
            p.range_vertex = to;
            p.edges.assign(flow.rbegin(), flow.rend());
            out.push_back(std::move(p));
        }
        if (flow.size() == max_len) return;
        for (EdgeIndex e : graph.out_edges(at)) {
            flow.push_back(e);
            self(self, graph.edge(e).range);
            flow.pop_back();
        }
    };
    dfs(dfs, from);
    std::sort(out.begin(), out.end(), path_less);
    return out;
}

namespace {

// Convert a closed walk given in traversal order into a Path.
Path loop_from_flow(const DiscreteGraph& graph, const std::vector<EdgeIndex>& flow) {
    std::vector<EdgeIndex> edges(flow.rbegin(), flow.rend());
    return Path::from_edges(graph, std::move(edges));
}

} // namespace

std::vector<Path> simple_loops(const DiscreteGraph& graph) {
    std::vector<Path> out;
    const std::size_t n = graph.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<EdgeIndex> flow;
    for (VertexIndex start = 0; start < n; ++start) {
        auto dfs = [&](auto&& self, VertexIndex at) -> void {
            for (EdgeIndex e : graph.out_edges(at)) {
                const VertexIndex next = graph.edge(e).range;
                if (next == start) {
                    flow.push_back(e);
                    out.push_back(loop_from_flow(graph, flow));
                    flow.pop_back();
                } else if (next > start && !on_path[next]) {
                    on_path[next] = 1;
                    flow.push_back(e);
                    self(self, next);
                    flow.pop_back();
                    on_path[next] = 0;
                }
            }
        };
        on_path[start] = 1;
        dfs(dfs, start);
        on_path[start] = 0;
    }
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.range_vertex != b.range_vertex) return a.range_vertex < b.range_vertex;
        return path_less(a, b);
    });
    return out;
}

std::vector<Path> simple_loops_at(const DiscreteGraph& graph, VertexIndex v) {
    std::vector<Path> out;
    for (const Path& loop : simple_loops(graph)) {
        // Traversal order t_1..t_n starting at the canonical base.
        std::vector<EdgeIndex> flow(loop.edges.rbegin(), loop.edges.rend());
        for (std::size_t k = 0; k < flow.size(); ++k) {
            if (graph.edge(flow[k]).domain != v) continue;
            std::vector<EdgeIndex> rotated;
            for (std::size_t i = 0; i < flow.size(); ++i) rotated.push_back(flow[(k + i) % flow.size()]);
            out.push_back(loop_from_flow(graph, rotated));
        }
    }
    std::sort(out.begin(), out.end(), path_less);
    return out;
}

bool loop_without_entrances(const DiscreteGraph& graph, const Path& loop) {
    if (!loop.is_loop()) throw PreconditionError("loop_without_entrances: input is not a loop");
    for (EdgeIndex e : loop.edges) {
        const EdgeClass& ec = graph.edge(e);
        if (ec.multiplicity != Multiplicity::finite(1)) return false;
        if (graph.in_edges(ec.range).size() != 1) return false;
    }
    return true;
}

DiscreteGraph restrict(const DiscreteGraph& graph, const VertexSet& x0) {
    GraphSpec spec;
    x0.for_each([&](VertexIndex v) { spec.vertices.push_back(graph.vertex_name(v)); });
    for (const EdgeClass& e : graph.edges()) {
        if (!x0.contains(e.domain)) continue;
        if (!x0.contains(e.range))
            throw PreconditionError("restrict: vertex set is not positively invariant (edge \"" +
                                    e.id + "\" leaves it)");
        spec.edges.push_back(EdgeSpec{e.id, graph.vertex_name(e.domain),
                                      graph.vertex_name(e.range), e.multiplicity});
    }
    return DiscreteGraph::validate(spec);
}

bool is_row_finite(const DiscreteGraph& graph) {
    const auto c = classify_vertices(graph);
    const VertexSet receivers = graph.all_vertices() - c.sources;
    return receivers == c.regular;
}

VertexSet translate(const DiscreteGraph& from, const VertexSet& set, const DiscreteGraph& to) {
    VertexSet out(to.vertex_count());
    set.for_each([&](VertexIndex v) {
        if (auto w = to.find_vertex(from.vertex_name(v))) out.insert(*w);
    });
    return out;
}

std::vector<std::string> names_of(const DiscreteGraph& graph, const VertexSet& set) {
    std::vector<std::string> out;
    set.for_each([&](VertexIndex v) { out.push_back(graph.vertex_name(v)); });
    return out;
}

} // namespace gcalg
