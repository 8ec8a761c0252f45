#pragma once

#include <initializer_list>
#include <string>

#include "gcalg/graph.hpp"

// Vertex set from names; unknown names are a test bug.
inline gcalg::VertexSet named(const gcalg::DiscreteGraph& g, std::initializer_list<const char*> names) {
    gcalg::VertexSet s = g.empty_set();
    for (const char* n : names) s.insert(g.find_vertex(n).value());
    return s;
}

inline gcalg::VertexIndex vid(const gcalg::DiscreteGraph& g, const std::string& name) {
    return g.find_vertex(name).value();
}

inline gcalg::DiscreteGraph make_graph(std::initializer_list<const char*> vertices,
                                       std::initializer_list<gcalg::EdgeSpec> edges) {
    gcalg::GraphSpec spec;
    for (const char* v : vertices) spec.vertices.emplace_back(v);
    spec.edges.assign(edges.begin(), edges.end());
    return gcalg::DiscreteGraph::validate(spec);
}

inline gcalg::EdgeSpec edge(const char* id, const char* d, const char* r, std::uint64_t k = 1) {
    return {id, d, r, gcalg::Multiplicity::finite(k)};
}

inline gcalg::EdgeSpec omega_edge(const char* id, const char* d, const char* r) {
    return {id, d, r, gcalg::Multiplicity::omega()};
}
