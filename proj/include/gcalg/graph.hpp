#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcalg/vertex_set.hpp"

namespace gcalg {

// Number of parallel edges carried by one edge class: a positive integer, or
// omega (countably many).
class Multiplicity {
public:
    constexpr Multiplicity() = default;
    static constexpr Multiplicity finite(std::uint64_t k) { return Multiplicity(k); }
    static constexpr Multiplicity omega() {
        Multiplicity m;
        m.omega_ = true;
        return m;
    }

    constexpr bool is_omega() const noexcept { return omega_; }
    // Undefined for omega.
    constexpr std::uint64_t count() const noexcept { return count_; }

    // Product; omega absorbs.
    Multiplicity operator*(const Multiplicity& other) const;

    friend constexpr bool operator==(const Multiplicity&, const Multiplicity&) = default;

    std::string to_string() const;

private:
    constexpr explicit Multiplicity(std::uint64_t k) : count_(k) {}

    std::uint64_t count_ = 1;
    bool omega_ = false;
};

struct EdgeSpec {
    std::string id;
    std::string domain;
    std::string range;
    Multiplicity multiplicity;
};

// Unvalidated description of a graph, as read from input.
struct GraphSpec {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
};

struct EdgeClass {
    std::string id;
    VertexIndex domain; // d(e)
    VertexIndex range;  // r(e)
    Multiplicity multiplicity;

    friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

// A finite discrete graph E = (E0, E1, d, r). An edge e points from its
// domain d(e) to its range r(e). Vertices and edge classes are stored sorted
// by id, and all indices refer to that canonical order.
//
// Instances only come out of validate(), so every instance satisfies the
// structural invariants and is immutable.
class DiscreteGraph {
public:
    DiscreteGraph() = default;

    // Throws GraphError on dangling endpoints, duplicate ids or multiplicity 0.
    static DiscreteGraph validate(const GraphSpec& spec);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
    const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
    const EdgeClass& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<EdgeClass>& edges() const noexcept { return edges_; }

    std::optional<VertexIndex> find_vertex(const std::string& name) const;
    std::optional<EdgeIndex> find_edge(const std::string& id) const;

    // r^{-1}(v) and d^{-1}(v), ascending edge indices.
    const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_.at(v); }
    const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_.at(v); }

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

    GraphSpec to_spec() const;

    friend bool operator==(const DiscreteGraph& a, const DiscreteGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<EdgeClass> edges_;
    std::vector<std::vector<EdgeIndex>> in_;
    std::vector<std::vector<EdgeIndex>> out_;
};

struct VertexClassification {
    VertexSet sources;            // receive no edge class
    VertexSet infinite_receivers; // receive an omega class
    VertexSet finite;             // complement of infinite_receivers
    VertexSet regular;            // receive >= 1 class, all finite
    VertexSet singular;           // sources or infinite receivers
};

VertexClassification classify_vertices(const DiscreteGraph& graph);

// Singular vertices of the restricted graph X (X1 = d^{-1}(X0)), in the
// parent graph's indexing. X0 need not be invariant.
VertexSet restricted_singular(const DiscreteGraph& graph, const VertexSet& x0);
// Regular vertices of the restricted graph, parent indexing.
VertexSet restricted_regular(const DiscreteGraph& graph, const VertexSet& x0);

// A finite path (e1, ..., en) with d(e_k) = r(e_{k+1}). The edge flow runs
// en first and e1 last: range() = r(e1), domain() = d(en). A length-0 path
// is a single vertex.
struct Path {
    VertexIndex range_vertex = 0;
    VertexIndex domain_vertex = 0;
    std::vector<EdgeIndex> edges; // e1 first

    std::size_t length() const noexcept { return edges.size(); }
    VertexIndex range() const noexcept { return range_vertex; }
    VertexIndex domain() const noexcept { return domain_vertex; }
    bool is_loop() const noexcept { return !edges.empty() && range_vertex == domain_vertex; }

    static Path vertex(VertexIndex v) { return Path{v, v, {}}; }
    // Checks composability; throws PreconditionError otherwise.
    static Path from_edges(const DiscreteGraph& graph, std::vector<EdgeIndex> edges);

    friend bool operator==(const Path&, const Path&) = default;
};

// Canonical path order: by length, then edge indices (e1 first), then vertex.
bool path_less(const Path& a, const Path& b);

Multiplicity path_multiplicity(const DiscreteGraph& graph, const Path& path);

// Eventually periodic infinite path (stem, cycle, cycle, ...).
// d(stem) = r(cycle) = d(cycle).
struct Lasso {
    Path stem;
    Path cycle;

    friend bool operator==(const Lasso&, const Lasso&) = default;
};

// All paths with domain `from`, range `to` and length <= max_len, in
// canonical order.
std::vector<Path> paths_between(const DiscreteGraph& graph, VertexIndex from, VertexIndex to,
                                std::size_t max_len);

// Simple loops (ranges r(e_i) pairwise distinct), one per rotation class,
// based at the smallest vertex on the loop.
std::vector<Path> simple_loops(const DiscreteGraph& graph);

// Every simple loop with base point v (all rotations are considered).
std::vector<Path> simple_loops_at(const DiscreteGraph& graph, VertexIndex v);

// True iff every loop edge has multiplicity 1 and is the only edge class
// into its range. Throws PreconditionError if `loop` is not a loop.
bool loop_without_entrances(const DiscreteGraph& graph, const Path& loop);

// The graph X = (X0, d^{-1}(X0), d, r). X0 must be positively invariant
// (PreconditionError otherwise).
DiscreteGraph restrict(const DiscreteGraph& graph, const VertexSet& x0);

// r(E1) = E0_rg.
bool is_row_finite(const DiscreteGraph& graph);

// Translate a set of `from` into the vertex indexing of `to` by name. Names
// absent from `to` are dropped.
VertexSet translate(const DiscreteGraph& from, const VertexSet& set, const DiscreteGraph& to);

std::vector<std::string> names_of(const DiscreteGraph& graph, const VertexSet& set);

} // namespace gcalg
