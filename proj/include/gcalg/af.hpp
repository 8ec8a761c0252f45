#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gcalg/graph.hpp"
#include "gcalg/representation.hpp"

namespace gcalg {

inline constexpr std::size_t kDefaultMaxSubset = 6;

// "{}", "{1}", "{1,2}", ... for a subset of {1..n} given as a bit mask
// (bit i stands for element i + 1).
std::string subset_name(std::uint64_t mask);
// "(x;{...})": the edge removing x from v.
std::string subset_edge_name(std::size_t x, std::uint64_t v_mask);

// Vertices: all subsets of {1..n}. Edges (x;v): v -> v \ {x} for x in v,
// multiplicity 1. n = 0 gives the single vertex {}. BoundExceeded
// ("--max-vertices") when n > max_n.
DiscreteGraph subset_graph(std::size_t n, std::size_t max_n = kDefaultMaxSubset);

// a(0) = 1, a(m) = m a(m-1) + 1. std::overflow_error past m = 20.
std::uint64_t a_sequence(std::size_t m);

struct AfBlock {
    std::string subset;           // v
    std::size_t size = 0;         // |v|
    std::size_t path_count = 0;   // paths with domain v
    std::uint64_t dimension = 0;  // a(|v|)
};

struct AfBlockReport {
    std::size_t n = 0;
    std::string v0;
    std::vector<AfBlock> blocks; // one per subset v of v0, smallest first
    bool census_ok = false;      // path_count == dimension for every block
    std::uint64_t total_dimension = 0; // sum of a(|v|): rank of the direct sum

    // Matrix units u_{y,z} = s_y (p_v - sum_x s_(x;v+x) s_(x;v+x)^*) s_z^* for
    // y, z paths with domain v, built in the direct sum of the path
    // representations at every v in v0 (a faithful copy of A_{v0}).
    bool matrix_units_checked = false;
    std::size_t matrix_unit_count = 0;
    std::size_t relation_checks = 0;
    std::size_t relation_failures = 0;
    bool units_rank_one = false;       // every u_{y,y} has trace 1
    bool units_sum_to_identity = false;
    // In the single representation on Lambda_{v0} only the v0 block
    // survives: a(n) x a(n) matrix units whose diagonal sums to 1.
    bool irreducible_block_ok = false;
    std::size_t lambda_v0_size = 0;

    bool ok() const noexcept {
        return census_ok && (!matrix_units_checked || (relation_failures == 0 && units_rank_one &&
                                                       units_sum_to_identity && irreducible_block_ok));
    }
};

// Census for every subset of {1..n}; matrix units additionally when
// n <= max_units_n. The census needs a(n) basis vectors at v0 = {1..n}, so
// max_basis caps it ("--max-basis").
AfBlockReport af_block_check(std::size_t n, std::size_t max_units_n = 4, std::size_t max_n = kDefaultMaxSubset,
                             std::size_t max_basis = kDefaultMaxBasis);

} // namespace gcalg
