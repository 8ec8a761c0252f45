#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcalg/graph.hpp"

namespace gcalg::corpus {

// Vertices "0".."n-1", edge "e<k>" from k to k+1 mod n.
DiscreteGraph cycle(std::size_t n);
// u -> w, edge "e".
DiscreteGraph edge();
// v -> w (e0, multiplicity 1) and v' -> w (e1, multiplicity omega).
DiscreteGraph omega();
// Self-loop "l" at a, plus "e": b -> a.
DiscreteGraph loop_entrance();
// Self-loop "l" at a, plus "e": c -> a with multiplicity omega. a is a
// breaking vertex.
DiscreteGraph breaking();
// Disjoint union of cycles; cycle i has vertices "c<i>_<k>".
DiscreteGraph disjoint_cycles(const std::vector<std::size_t>& lengths);

// Resolve "name" or "name:arg". Known names: cycle:N, edge, omega,
// loop_entrance, breaking, cycles:N,M,..., subset:N. Throws
// std::invalid_argument for unknown names or bad arguments.
DiscreteGraph by_name(const std::string& spec);

// Names used by the determinism checks and the CLI help text.
std::vector<std::string> standard_names();

} // namespace gcalg::corpus
