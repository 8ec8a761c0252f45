#include <doctest.h>

#include "gcalg/corpus.hpp"
#include "gcalg/errors.hpp"
#include "gcalg/io.hpp"
#include "gcalg/lattice.hpp"
#include "helpers.hpp"

using namespace gcalg;
using io::json;

TEST_CASE("graph json round trip") {
    for (const auto& name : corpus::standard_names()) {
        CAPTURE(name);
        const auto g = corpus::by_name(name);
        const auto text = io::dump(io::graph_to_json(g));
        CHECK(io::parse_graph(text) == g);
        CHECK(io::dump(io::graph_to_json(io::parse_graph(text))) == text);
    }
}

TEST_CASE("multiplicity field") {
    const auto g = io::parse_graph(R"({"vertices": ["a", "b"],
        "edges": [{"id": "x", "domain": "a", "range": "b", "multiplicity": "omega"},
                  {"id": "y", "domain": "b", "range": "a"}]})");
    CHECK(g.edge(*g.find_edge("x")).multiplicity.is_omega());
    CHECK(g.edge(*g.find_edge("y")).multiplicity == Multiplicity::finite(1));
    CHECK(io::graph_to_json(g)["edges"][0]["multiplicity"] == "omega");
}

TEST_CASE("edges may be omitted") {
    const auto g = io::parse_graph(R"({"vertices": ["a"]})");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse errors") {
    SUBCASE("syntax error carries a position") {
        try {
            io::parse_graph("{\n  \"vertices\": [\"a\",\n}");
            FAIL("expected ParseError");
        } catch (const ParseError& err) {
            CHECK(err.line() == 3);
            CHECK(err.column() >= 1);
        }
    }
    SUBCASE("schema problems") {
        CHECK_THROWS_AS(io::parse_graph(R"({"edges": []})"), ParseError);
        CHECK_THROWS_AS(io::parse_graph(R"({"vertices": [1], "edges": []})"), ParseError);
        CHECK_THROWS_AS(io::parse_graph(R"({"vertices": ["a"], "edges": [{"id": "x", "domain": "a"}]})"),
                        ParseError);
        CHECK_THROWS_AS(io::parse_graph(
                            R"({"vertices": ["a"], "edges": [{"id": "x", "domain": "a", "range": "a", "multiplicity": "lots"}]})"),
                        ParseError);
        CHECK_THROWS_AS(io::parse_graph("[]"), ParseError);
    }
    SUBCASE("structural problems") {
        CHECK_THROWS_AS(io::parse_graph(
                            R"({"vertices": ["a"], "edges": [{"id": "x", "domain": "a", "range": "a", "multiplicity": 0}]})"),
                        GraphError);
        CHECK_THROWS_AS(io::parse_graph(R"({"vertices": ["a", "a"], "edges": []})"), GraphError);
        CHECK_THROWS_AS(io::parse_graph(R"({"vertices": ["a"], "edges": [{"id": "x", "domain": "a", "range": "b"}]})"),
                        GraphError);
    }
}

TEST_CASE("deterministic reports") {
    const io::Bounds bounds;
    for (const auto& name : corpus::standard_names()) {
        CAPTURE(name);
        const auto g = corpus::by_name(name);
        CHECK(io::dump(io::analysis_report(g, bounds)) == io::dump(io::analysis_report(g, bounds)));
    }
}

TEST_CASE("analysis report contents") {
    const auto r = io::analysis_report(corpus::cycle(3), io::Bounds{});
    CHECK(r["lattice"]["pairs"].size() == 2);
    CHECK(r["prime_ideals"].size() == 1);
    CHECK(r["prime_ideals"][0]["variant"] == "circle_family");
    CHECK(r["prime_ideals"][0]["period"] == 3);
    const auto le = io::analysis_report(corpus::loop_entrance(), io::Bounds{});
    CHECK(le["maximal_heads"].size() == 2);
}

TEST_CASE("lattice dot") {
    const auto g = corpus::omega();
    const auto dot = io::lattice_to_dot(g, enumerate_admissible_pairs(g));
    CHECK(dot.rfind("digraph ideals {", 0) == 0);
    CHECK(dot.back() == '\n');
    CHECK(dot.find("->") != std::string::npos);
    std::size_t open = 0, close = 0;
    for (char c : dot) {
        open += c == '{';
        close += c == '}';
    }
    CHECK(open == close);
}

TEST_CASE("representation report") {
    const auto e = corpus::edge();
    const auto r = io::representation_report(e, vid(e, "u"), io::Bounds{});
    CHECK(r["dimension"] == 2);
    CHECK(r["relations"]["pass"] == true);
    CHECK(r["kernel_pair"]["Z"] == json::array({"u"}));
    CHECK(r["commutant_dimension"] == 1);

    const auto s2 = subset_graph(2);
    const auto regular = io::representation_report(s2, vid(s2, "{1}"), io::Bounds{});
    CHECK(regular["relations"]["c"] == false);
    CHECK(regular["kernel_pair"].is_null());
    CHECK(regular.contains("note"));

    CHECK_THROWS_AS(io::representation_report(corpus::cycle(3), 0, io::Bounds{}), PreconditionError);
}
