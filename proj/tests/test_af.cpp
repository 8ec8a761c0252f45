#include <doctest.h>

#include "gcalg/af.hpp"
#include "gcalg/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gcalg;

TEST_CASE("subset graph shape") {
    CHECK(subset_graph(1).vertex_count() == 2);
    CHECK(subset_graph(1).edge_count() == 1);
    CHECK(subset_graph(2).vertex_count() == 4);
    CHECK(subset_graph(2).edge_count() == 4);
    CHECK(subset_graph(3).vertex_count() == 8);
    CHECK(subset_graph(3).edge_count() == 12);
    CHECK(subset_graph(0).vertex_count() == 1);
    const auto g = subset_graph(2);
    const auto e = g.edge(*g.find_edge("(1;{1,2})"));
    CHECK(g.vertex_name(e.domain) == "{1,2}");
    CHECK(g.vertex_name(e.range) == "{2}");
    CHECK_THROWS_AS(subset_graph(7), BoundExceeded);
    CHECK(subset_graph(7, 7).vertex_count() == 128);
}

TEST_CASE("a(m)") {
    CHECK(a_sequence(0) == 1);
    CHECK(a_sequence(1) == 2);
    CHECK(a_sequence(2) == 5);
    CHECK(a_sequence(3) == 16);
    for (std::size_t m = 0; m <= 10; ++m) CHECK(a_sequence(m) == oracle::factorial_sum(m));
    for (std::size_t m = 0; m <= 6; ++m) CHECK(a_sequence(m) == oracle::removal_sequences(m));
    CHECK_THROWS_AS(a_sequence(21), std::overflow_error);
}

TEST_CASE("af blocks") {
    SUBCASE("n = 0") {
        const auto r = af_block_check(0);
        REQUIRE(r.blocks.size() == 1);
        CHECK(r.blocks[0].dimension == 1);
        CHECK(r.ok());
    }
    SUBCASE("n = 1") {
        const auto r = af_block_check(1);
        REQUIRE(r.blocks.size() == 2);
        CHECK(r.blocks[0].dimension == 1);
        CHECK(r.blocks[1].dimension == 2);
        CHECK(r.ok());
    }
    SUBCASE("n = 2") {
        const auto r = af_block_check(2);
        std::vector<std::pair<std::string, std::uint64_t>> blocks;
        for (const auto& b : r.blocks) blocks.emplace_back(b.subset, b.dimension);
        CHECK(blocks == std::vector<std::pair<std::string, std::uint64_t>>{{"{}", 1}, {"{1}", 2}, {"{2}", 2}, {"{1,2}", 5}});
        CHECK(r.lambda_v0_size == 5);
        CHECK(r.total_dimension == 10);
        CHECK(r.matrix_unit_count == 1 + 4 + 4 + 25);
        CHECK(r.ok());
    }
    SUBCASE("n = 3") {
        const auto r = af_block_check(3);
        CHECK(r.census_ok);
        CHECK(r.total_dimension == 1 + 3 * 2 + 3 * 5 + 16);
        CHECK(r.relation_failures == 0);
        CHECK(r.relation_checks == r.matrix_unit_count * r.matrix_unit_count);
        CHECK(r.ok());
    }
    SUBCASE("census only above the unit bound") {
        const auto r = af_block_check(5);
        CHECK(r.census_ok);
        CHECK_FALSE(r.matrix_units_checked);
        CHECK(r.lambda_v0_size == 326);
    }
}
