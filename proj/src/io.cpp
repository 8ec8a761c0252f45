#include "gcalg/io.hpp"

#include <sstream>

#include "gcalg/errors.hpp"

namespace gcalg::io {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::string line_text(const std::string& text, std::size_t line) {
    std::istringstream in(text);
    std::string current;
    for (std::size_t i = 0; i < line && std::getline(in, current); ++i) {
    }
    return current;
}

const json& require(const json& object, const char* key, const std::string& where) {
    if (!object.is_object() || !object.contains(key))
        throw ParseError(where + ": missing key \"" + key + "\"");
    return object.at(key);
}

std::string require_string(const json& object, const char* key, const std::string& where) {
    const json& value = require(object, key, where);
    if (!value.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string");
    return value.get<std::string>();
}

Multiplicity parse_multiplicity(const json& edge, const std::string& where) {
    if (!edge.contains("multiplicity")) return Multiplicity::finite(1);
    const json& m = edge.at("multiplicity");
    if (m.is_string() && m.get<std::string>() == "omega") return Multiplicity::omega();
    if (m.is_number_unsigned()) return Multiplicity::finite(m.get<std::uint64_t>());
    if (m.is_number_integer() && m.get<std::int64_t>() >= 0) return Multiplicity::finite(m.get<std::uint64_t>());
    throw ParseError(where + ": \"multiplicity\" must be a non-negative integer or \"omega\"");
}

json edges_to_json(const DiscreteGraph& graph, const std::vector<EdgeIndex>& edges) {
    json out = json::array();
    for (EdgeIndex e : edges) out.push_back(graph.edge(e).id);
    return out;
}

std::string set_label(const DiscreteGraph& graph, const VertexSet& set) {
    std::string out = "{";
    bool first = true;
    set.for_each([&](VertexIndex v) {
        if (!first) out += ", ";
        out += graph.vertex_name(v);
        first = false;
    });
    return out + "}";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string basis_label(const DiscreteGraph& graph, const CopyPath& path) {
    if (path.edges.empty()) return graph.vertex_name(path.domain_vertex);
    std::string out;
    for (const EdgeCopy& e : path.edges) {
        if (!out.empty()) out += ' ';
        out += edge_copy_name(graph, e);
    }
    return out;
}

} // namespace

DiscreteGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        const auto [line, column] = line_and_column(text, err.byte == 0 ? 0 : err.byte - 1);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             err.what() + "\n  " + line_text(text, line),
                         line, column);
    }
    if (!doc.is_object()) throw ParseError("graph: top-level value must be an object");

    GraphSpec spec;
    const json& vertices = require(doc, "vertices", "graph");
    if (!vertices.is_array()) throw ParseError("graph: \"vertices\" must be an array");
    for (const json& v : vertices) {
        if (!v.is_string()) throw ParseError("graph: vertex ids must be strings");
        spec.vertices.push_back(v.get<std::string>());
    }
    if (doc.contains("edges")) {
        const json& edges = doc.at("edges");
        if (!edges.is_array()) throw ParseError("graph: \"edges\" must be an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string where = "edges[" + std::to_string(i) + "]";
            const json& e = edges[i];
            if (!e.is_object()) throw ParseError(where + ": must be an object");
            spec.edges.push_back(EdgeSpec{require_string(e, "id", where), require_string(e, "domain", where),
                                          require_string(e, "range", where), parse_multiplicity(e, where)});
        }
    }
    return DiscreteGraph::validate(spec);
}

json graph_to_json(const DiscreteGraph& graph) {
    json edges = json::array();
    for (const EdgeClass& e : graph.edges()) {
        json m = e.multiplicity.is_omega() ? json("omega") : json(e.multiplicity.count());
        edges.push_back({{"id", e.id},
                         {"domain", graph.vertex_name(e.domain)},
                         {"range", graph.vertex_name(e.range)},
                         {"multiplicity", m}});
    }
    return {{"vertices", graph.vertex_names()}, {"edges", edges}};
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

json set_to_json(const DiscreteGraph& graph, const VertexSet& set) { return names_of(graph, set); }

json path_to_json(const DiscreteGraph& graph, const Path& path) {
    return {{"edges", edges_to_json(graph, path.edges)},
            {"range", graph.vertex_name(path.range())},
            {"domain", graph.vertex_name(path.domain())}};
}

json pair_to_json(const DiscreteGraph& graph, const AdmissiblePair& pair) {
    return {{"X0", set_to_json(graph, pair.x0)}, {"Z", set_to_json(graph, pair.z)}};
}

json orbit_to_json(const DiscreteGraph& graph, const NegativeOrbit& orbit) {
    json out{{"head", graph.vertex_name(orbit.head)}};
    if (orbit.is_finite()) {
        out["kind"] = "finite";
        out["path"] = path_to_json(graph, orbit.finite_path());
    } else {
        out["kind"] = "eventually_periodic";
        out["stem"] = path_to_json(graph, orbit.lasso().stem);
        out["cycle"] = path_to_json(graph, orbit.lasso().cycle);
    }
    out["orbit_space"] = set_to_json(graph, orbit_space(graph, orbit));
    return out;
}

json verdict_to_json(const DiscreteGraph& graph, const Verdict& verdict) {
    json witness = json::object();
    const Witness& w = verdict.witness;
    if (!w.loops.empty()) {
        witness["loops"] = json::array();
        for (const Path& p : w.loops) witness["loops"].push_back(path_to_json(graph, p));
    }
    if (!w.vertices.empty()) {
        witness["vertices"] = json::array();
        for (VertexIndex v : w.vertices) witness["vertices"].push_back(graph.vertex_name(v));
    }
    if (!w.sets.empty()) {
        witness["sets"] = json::array();
        for (const VertexSet& s : w.sets) witness["sets"].push_back(set_to_json(graph, s));
    }
    if (!w.orbits.empty()) {
        witness["orbits"] = json::array();
        for (const NegativeOrbit& o : w.orbits) witness["orbits"].push_back(orbit_to_json(graph, o));
    }
    if (!w.note.empty()) witness["note"] = w.note;
    return {{"predicate", verdict.predicate}, {"value", verdict.value}, {"witness", witness}};
}

json lattice_to_json(const DiscreteGraph& graph, const IdealLattice& lattice) {
    json pairs = json::array();
    for (std::size_t i = 0; i < lattice.pairs.size(); ++i) {
        json p = pair_to_json(graph, lattice.pairs[i]);
        p["index"] = i;
        pairs.push_back(std::move(p));
    }
    return {{"pairs", pairs},
            {"pair_order", lattice.pair_covers},
            {"ideal_order", lattice.ideal_covers},
            {"whole_algebra", lattice.bottom()},
            {"zero_ideal", lattice.top()}};
}

json prime_to_json(const DiscreteGraph& graph, const PrimeIdealDescriptor& prime) {
    json out{{"variant", variant_tag(prime)}, {"pair", pair_to_json(graph, underlying_pair(graph, prime))}};
    if (const auto* bv = std::get_if<BreakingVertexPrime>(&prime)) {
        out["vertex"] = graph.vertex_name(bv->vertex);
    } else if (const auto* head = std::get_if<AperiodicHeadPrime>(&prime)) {
        out["X0"] = set_to_json(graph, head->x0);
    } else {
        const PeriodicClass& cls = std::get<CircleFamilyPrime>(prime).periodic_class;
        out["representatives"] = set_to_json(graph, cls.representatives);
        out["loop"] = path_to_json(graph, cls.loop);
        out["period"] = cls.period;
        out["parameter"] = "w in T";
        out["gauge_stabilizer"] = "z^" + std::to_string(cls.period) + " = 1";
    }
    return out;
}

json primes_to_json(const DiscreteGraph& graph, const std::vector<PrimeIdealDescriptor>& primes) {
    json out = json::array();
    for (const PrimeIdealDescriptor& p : primes) out.push_back(prime_to_json(graph, p));
    return out;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json af_to_json(const AfBlockReport& report) {
    json blocks = json::array();
    for (const AfBlock& b : report.blocks)
        blocks.push_back({{"subset", b.subset},
                          {"size", b.size},
                          {"path_count", b.path_count},
                          {"dimension", b.dimension}});
    json out{{"n", report.n},
             {"v0", report.v0},
             {"blocks", blocks},
             {"census_ok", report.census_ok},
             {"total_dimension", report.total_dimension},
             {"lambda_v0_size", report.lambda_v0_size},
             {"matrix_units_checked", report.matrix_units_checked},
             {"ok", report.ok()}};
    if (report.matrix_units_checked) {
        out["matrix_units"] = {{"count", report.matrix_unit_count},
                               {"relation_checks", report.relation_checks},
                               {"relation_failures", report.relation_failures},
                               {"rank_one", report.units_rank_one},
                               {"sum_to_identity", report.units_sum_to_identity},
                               {"irreducible_block_ok", report.irreducible_block_ok}};
    }
    return out;
}

json representation_report(const DiscreteGraph& graph, VertexIndex v0, const Bounds& bounds) {
    const PathRep rep = build_path_rep(graph, v0, bounds.max_basis);
    const CkReport ck = verify_ck_pair(graph, rep);

    json basis = json::array();
    for (const CopyPath& p : rep.basis.paths) basis.push_back(basis_label(graph, p));
    json t0 = json::object();
    for (const auto& [v, m] : rep.t0) t0[graph.vertex_name(v)] = matrix_to_json(m);
    json t1 = json::object();
    for (const auto& [e, m] : rep.t1) t1[edge_copy_name(graph, e)] = matrix_to_json(m);

    json failures = json::array();
    for (const CkFailure& f : ck.failures)
        failures.push_back({{"identity", std::string(1, f.identity)},
                            {"subject", f.subject},
                            {"row", f.row},
                            {"col", f.col},
                            {"expected", f.expected},
                            {"actual", f.actual}});
    json out{{"v0", graph.vertex_name(v0)},
             {"basis", basis},
             {"dimension", rep.basis.size()},
             {"T0", t0},
             {"T1", t1},
             {"relations",
              {{"a", ck.identity_ok('a')},
               {"b", ck.identity_ok('b')},
               {"c", ck.identity_ok('c')},
               {"checks", {{"a", ck.checks_a}, {"b", ck.checks_b}, {"c", ck.checks_c}}},
               {"failures", failures},
               {"pass", ck.ok()}}}};
    if (classify_vertices(graph).singular.contains(v0)) {
        out["kernel_pair"] = pair_to_json(graph, kernel_pair(graph, rep));
    } else {
        out["kernel_pair"] = nullptr;
        out["note"] = "v0 is regular: the length-0 path lies outside the range of every T1, so the "
                      "Cuntz-Krieger relation at v0 fails and no kernel pair is defined";
    }
    const auto commutant = commutant_dimension(rep);
    out["commutant_dimension"] = commutant ? json(*commutant) : json(nullptr);
    return out;
}

json analysis_report(const DiscreteGraph& graph, const Bounds& bounds) {
    const VertexClassification cls = classify_vertices(graph);
    const auto invariant = enumerate_invariant_sets(graph, bounds.max_vertices);
    const IdealLattice lattice = enumerate_admissible_pairs(graph, bounds.max_vertices);

    json invariant_sets = json::array();
    for (const VertexSet& s : invariant) invariant_sets.push_back(set_to_json(graph, s));

    json verdicts = json::object();
    for (const Verdict& v : {is_simple(graph), is_prime_algebra(graph), is_minimal(graph),
                             is_topologically_free(graph), is_free(graph), is_topologically_transitive(graph),
                             is_generated_by_loop(graph)})
        verdicts[v.predicate] = verdict_to_json(graph, v);

    const TransitivityForms forms = transitivity_forms(graph, bounds.max_vertices, bounds.max_stem);
    json transitivity{{"common_ancestors", forms.common_ancestors},
                      {"saturated_intersect", forms.saturated_intersect},
                      {"top_pair_prime", forms.top_pair_prime},
                      {"whole_space_head", forms.whole_space_head},
                      {"dense_orbit", forms.dense_orbit ? orbit_to_json(graph, *forms.dense_orbit) : json(nullptr)}};

    json heads = json::array();
    for (const MaximalHead& h : maximal_heads(graph, bounds.max_vertices))
        heads.push_back({{"X0", set_to_json(graph, h.x0)}, {"periodic", h.is_periodic()}});

    json periodic = json::object();
    for (const auto& [v, period] : periodic_points(graph)) periodic[graph.vertex_name(v)] = period;

    json prime_pairs = json::array();
    for (const AdmissiblePair& p : prime_admissible_pairs(graph, bounds.max_vertices))
        prime_pairs.push_back(pair_to_json(graph, p));

    const PrimitivityReport prim = primitivity_report(graph, bounds.max_vertices, bounds.max_stem);
    json primitivity{{"second_countable", prim.second_countable},
                     {"free_with_dense_orbit", prim.free_with_dense_orbit},
                     {"free_and_transitive", prim.free_and_transitive},
                     {"algebra_primitive", prim.algebra_primitive},
                     {"primitive_ideal_count", prim.primitive_ideals.size()},
                     {"note", prim.note}};

    return {{"graph",
             {{"vertices", graph.vertex_names()},
              {"edge_classes", graph.edge_count()},
              {"row_finite", is_row_finite(graph)}}},
            {"classification",
             {{"sources", set_to_json(graph, cls.sources)},
              {"infinite_receivers", set_to_json(graph, cls.infinite_receivers)},
              {"regular", set_to_json(graph, cls.regular)},
              {"singular", set_to_json(graph, cls.singular)}}},
            {"invariant_set_count", invariant.size()},
            {"invariant_sets", invariant_sets},
            {"lattice", lattice_to_json(graph, lattice)},
            {"verdicts", verdicts},
            {"transitivity", transitivity},
            {"breaking_vertices", set_to_json(graph, breaking_vertices(graph))},
            {"maximal_heads", heads},
            {"periodic_points", periodic},
            {"prime_pairs", prime_pairs},
            {"prime_ideals", primes_to_json(graph, prime_ideals(graph, bounds.max_vertices))},
            {"primitivity", primitivity}};
}

std::string lattice_to_dot(const DiscreteGraph& graph, const IdealLattice& lattice) {
    std::ostringstream out;
    out << "digraph ideals {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.pairs.size(); ++i) {
        const AdmissiblePair& p = lattice.pairs[i];
        out << "  p" << i << " [label=\"" << dot_escape(set_label(graph, p.x0) + " | " + set_label(graph, p.z))
            << "\"];\n";
    }
    for (const auto& [from, to] : lattice.ideal_covers) out << "  p" << from << " -> p" << to << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace gcalg::io
