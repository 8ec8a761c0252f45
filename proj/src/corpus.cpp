#include "gcalg/corpus.hpp"

#include <charconv>
#include <stdexcept>

#include "gcalg/af.hpp"

namespace gcalg::corpus {

namespace {

EdgeSpec simple_edge(std::string id, std::string d, std::string r,
                     Multiplicity m = Multiplicity::finite(1)) {
    return EdgeSpec{std::move(id), std::move(d), std::move(r), m};
}

std::size_t parse_count(const std::string& text, const std::string& spec) {
    std::size_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw std::invalid_argument("bad corpus argument in \"" + spec + "\"");
    return value;
}

} // namespace

DiscreteGraph cycle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cycle: length must be positive");
    GraphSpec spec;
    for (std::size_t k = 0; k < n; ++k) spec.vertices.push_back(std::to_string(k));
    for (std::size_t k = 0; k < n; ++k)
        spec.edges.push_back(
            simple_edge("e" + std::to_string(k), std::to_string(k), std::to_string((k + 1) % n)));
    return DiscreteGraph::validate(spec);
}

DiscreteGraph edge() {
    return DiscreteGraph::validate(GraphSpec{{"u", "w"}, {simple_edge("e", "u", "w")}});
}

DiscreteGraph omega() {
    return DiscreteGraph::validate(GraphSpec{
        {"v", "v'", "w"},
        {simple_edge("e0", "v", "w"), simple_edge("e1", "v'", "w", Multiplicity::omega())}});
}

DiscreteGraph loop_entrance() {
    return DiscreteGraph::validate(
        GraphSpec{{"a", "b"}, {simple_edge("l", "a", "a"), simple_edge("e", "b", "a")}});
}

DiscreteGraph breaking() {
    return DiscreteGraph::validate(GraphSpec{
        {"a", "c"}, {simple_edge("l", "a", "a"), simple_edge("e", "c", "a", Multiplicity::omega())}});
}

DiscreteGraph disjoint_cycles(const std::vector<std::size_t>& lengths) {
    GraphSpec spec;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const std::size_t n = lengths[i];
        if (n == 0) throw std::invalid_argument("cycles: lengths must be positive");
        const std::string prefix = "c" + std::to_string(i) + "_";
        for (std::size_t k = 0; k < n; ++k) spec.vertices.push_back(prefix + std::to_string(k));
        for (std::size_t k = 0; k < n; ++k)
            spec.edges.push_back(simple_edge("c" + std::to_string(i) + "e" + std::to_string(k),
                                             prefix + std::to_string(k),
                                             prefix + std::to_string((k + 1) % n)));
    }
    return DiscreteGraph::validate(spec);
}

DiscreteGraph by_name(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto require_no_arg = [&] {
        if (colon != std::string::npos)
            throw std::invalid_argument("corpus graph \"" + name + "\" takes no argument");
    };
    if (name == "cycle") return cycle(parse_count(arg, spec));
    if (name == "subset") return subset_graph(parse_count(arg, spec));
    if (name == "cycles") {
        std::vector<std::size_t> lengths;
        std::size_t start = 0;
        while (start <= arg.size()) {
            const auto comma = arg.find(',', start);
            const auto end = comma == std::string::npos ? arg.size() : comma;
            lengths.push_back(parse_count(arg.substr(start, end - start), spec));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return disjoint_cycles(lengths);
    }
    if (name == "edge") return require_no_arg(), edge();
    if (name == "omega") return require_no_arg(), omega();
    if (name == "loop_entrance") return require_no_arg(), loop_entrance();
    if (name == "breaking") return require_no_arg(), breaking();
    throw std::invalid_argument("unknown corpus graph \"" + spec + "\"");
}

std::vector<std::string> standard_names() {
    return {"cycle:1", "cycle:2", "cycle:3", "cycle:4", "cycle:5",  "cycle:6",
            "edge",    "omega",   "loop_entrance", "breaking", "cycles:2,3", "subset:1",
            "subset:2", "subset:3"};
}

} // namespace gcalg::corpus
