// gcalg: analyze finite discrete graphs and their graph algebras.
//
// Exit codes: 0 success, 2 input or precondition error, 3 bound exceeded.

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "gcalg/corpus.hpp"
#include "gcalg/errors.hpp"
#include "gcalg/io.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kBoundError = 3;

struct Input {
    std::string path;
    std::string corpus;
};

gcalg::DiscreteGraph load(const Input& in) {
    if (!in.corpus.empty()) return gcalg::corpus::by_name(in.corpus);
    if (in.path.empty()) throw std::invalid_argument("no input: give a graph file, \"-\" for stdin, or --corpus NAME");
    std::string text;
    if (in.path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream file(in.path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open '" + in.path + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return gcalg::io::parse_graph(text);
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + out + "'");
    file << text;
}

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("graph", in.path, "Graph JSON file, or - for stdin");
    cmd->add_option("--corpus", in.corpus, "Built-in graph, e.g. cycle:3 (listed in the top-level --help)");
}

std::string corpus_help() {
    std::string text = "Built-in graphs for --corpus: cycle:N, edge, omega, loop_entrance, breaking, cycles:N,M,..., "
                       "subset:N.\nExamples:";
    for (const std::string& name : gcalg::corpus::standard_names()) text += " " + name;
    return text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph algebra analysis for finite discrete graphs"};
    app.footer(corpus_help());
    app.require_subcommand(1);

    gcalg::io::Bounds bounds;
    std::size_t max_stem = 0;
    std::string out;
    auto* max_vertices_opt =
        app.add_option("--max-vertices", bounds.max_vertices, "Largest vertex count for subset enumeration")
            ->capture_default_str();
    app.add_option("--max-basis", bounds.max_basis, "Largest path basis for representations")->capture_default_str();
    auto* stem_opt = app.add_option("--max-stem", max_stem, "Longest negative-orbit stem (default |E0|)");
    app.add_option("--out", out, "Write output here instead of stdout");

    Input in;
    auto* analyze = app.add_subcommand("analyze", "Classification, ideal lattice, verdicts and prime ideals");
    add_input(analyze, in);

    bool dot = false;
    auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the gauge-invariant ideals");
    add_input(lattice, in);
    lattice->add_flag("--dot", dot, "Emit DOT instead of JSON");

    auto* primes = app.add_subcommand("primes", "Prime ideals");
    add_input(primes, in);

    std::string v0_name;
    auto* rep = app.add_subcommand("rep", "Path-space representation at a vertex, with relation checks");
    add_input(rep, in);
    rep->add_option("--v0", v0_name, "Base vertex")->required();

    std::size_t af_n = 0;
    auto* af = app.add_subcommand("af", "Block structure of the subset-graph AF algebra");
    af->add_option("n", af_n, "Size of the ground set")->required();

    // Global options may also follow the subcommand.
    for (CLI::App* cmd : {analyze, lattice, primes, rep, af}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kInputError;
    }
    if (stem_opt->count() > 0) bounds.max_stem = max_stem;

    try {
        if (*af) {
            // The subset graph on n elements has 2^n vertices.
            std::size_t max_n = gcalg::kDefaultMaxSubset;
            if (max_vertices_opt->count() > 0)
                for (max_n = 0; max_n < 62 && (std::size_t{2} << max_n) <= bounds.max_vertices;) ++max_n;
            emit(gcalg::io::dump(gcalg::io::af_to_json(gcalg::af_block_check(af_n, 4, max_n, bounds.max_basis))), out);
            return 0;
        }
        const gcalg::DiscreteGraph graph = load(in);
        if (*analyze) {
            emit(gcalg::io::dump(gcalg::io::analysis_report(graph, bounds)), out);
        } else if (*lattice) {
            const auto ideal_lattice = gcalg::enumerate_admissible_pairs(graph, bounds.max_vertices);
            emit(dot ? gcalg::io::lattice_to_dot(graph, ideal_lattice)
                     : gcalg::io::dump(gcalg::io::lattice_to_json(graph, ideal_lattice)),
                 out);
        } else if (*primes) {
            emit(gcalg::io::dump(gcalg::io::primes_to_json(graph, gcalg::prime_ideals(graph, bounds.max_vertices))),
                 out);
        } else if (*rep) {
            const auto v0 = graph.find_vertex(v0_name);
            if (!v0) throw std::invalid_argument("unknown vertex '" + v0_name + "'");
            emit(gcalg::io::dump(gcalg::io::representation_report(graph, *v0, bounds)), out);
        }
    } catch (const gcalg::BoundExceeded& err) {
        std::cerr << "gcalg: " << err.what() << " (raise " << err.flag() << ")\n";
        return kBoundError;
    } catch (const gcalg::ParseError& err) {
        std::cerr << "gcalg: parse error: " << err.what() << "\n";
        return kInputError;
    } catch (const gcalg::GraphError& err) {
        std::cerr << "gcalg: invalid graph: " << err.what() << "\n";
        return kInputError;
    } catch (const gcalg::PreconditionError& err) {
        std::cerr << "gcalg: " << err.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "gcalg: " << err.what() << "\n";
        return kInputError;
    }
    return 0;
}
