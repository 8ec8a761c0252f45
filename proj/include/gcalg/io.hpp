#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "gcalg/af.hpp"
#include "gcalg/classification.hpp"
#include "gcalg/representation.hpp"

namespace gcalg::io {

using json = nlohmann::json;

// Graph files:
//   {"vertices": ["u", "w"],
//    "edges": [{"id": "e", "domain": "u", "range": "w", "multiplicity": 1}]}
// "multiplicity" is a positive integer or "omega" and defaults to 1; a missing
// "edges" means no edges.
// Syntax and schema problems raise ParseError (with line/column for syntax
// errors); structural problems raise GraphError.
DiscreteGraph parse_graph(const std::string& text);
json graph_to_json(const DiscreteGraph& graph);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& value);

json set_to_json(const DiscreteGraph& graph, const VertexSet& set);
json path_to_json(const DiscreteGraph& graph, const Path& path);
json pair_to_json(const DiscreteGraph& graph, const AdmissiblePair& pair);
json orbit_to_json(const DiscreteGraph& graph, const NegativeOrbit& orbit);
json verdict_to_json(const DiscreteGraph& graph, const Verdict& verdict);
json lattice_to_json(const DiscreteGraph& graph, const IdealLattice& lattice);
json prime_to_json(const DiscreteGraph& graph, const PrimeIdealDescriptor& prime);
json primes_to_json(const DiscreteGraph& graph, const std::vector<PrimeIdealDescriptor>& primes);
json matrix_to_json(const IntMatrix& m);
json af_to_json(const AfBlockReport& report);

struct Bounds {
    std::size_t max_vertices = kDefaultMaxVertices;
    std::size_t max_basis = kDefaultMaxBasis;
    std::optional<std::size_t> max_stem;
};

// Path representation at v0 with its relation check, the kernel pair (for
// singular v0) and the informational commutant dimension.
json representation_report(const DiscreteGraph& graph, VertexIndex v0, const Bounds& bounds);

// Classification, lattice, verdicts and prime ideals in one document.
json analysis_report(const DiscreteGraph& graph, const Bounds& bounds);

// Hasse diagram of the ideal lattice: one node per admissible pair labelled
// "X0 | Z", each arrow pointing from an ideal to one covering it, so the zero
// ideal (E0, E0_sg) sits on top.
std::string lattice_to_dot(const DiscreteGraph& graph, const IdealLattice& lattice);

} // namespace gcalg::io
