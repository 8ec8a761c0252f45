#include "gcalg/representation.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcalg/errors.hpp"
#include "gcalg/orbits.hpp"

namespace gcalg {

namespace {

bool basis_less(const CopyPath& a, const CopyPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.edges < b.edges;
}

std::string path_text(const DiscreteGraph& graph, const Path& path) {
    std::string out;
    for (EdgeIndex e : path.edges) {
        if (!out.empty()) out += ' ';
        out += graph.edge(e).id;
    }
    return out;
}

void check_finite_path_space(const DiscreteGraph& graph, VertexIndex v0) {
    const VertexSet orbit = positive_orbit(graph, v0);
    for (const EdgeClass& e : graph.edges())
        if (e.multiplicity.is_omega() && orbit.contains(e.domain))
            throw PreconditionError("infinite path space: omega edge class '" + e.id + "' is reachable from '" +
                                    graph.vertex_name(v0) + "'");
    for (const Path& loop : simple_loops(graph))
        if (orbit.contains(loop.range()))
            throw PreconditionError("infinite path space: cycle reachable from '" + graph.vertex_name(v0) +
                                    "': (" + path_text(graph, loop) + ")");
}

SparseMatrix sparse(const IntMatrix& m) { return SparseMatrix::from_dense(m); }

// Records the first entry where actual and expected differ, if any.
void compare(CkReport& report, char identity, std::string subject, const SparseMatrix& actual,
             const SparseMatrix& expected) {
    if (actual == expected) return;
    const SparseMatrix diff = actual - expected;
    const auto& first = diff.entries().front();
    std::int64_t want = 0;
    for (const auto& entry : expected.entries())
        if (entry.row == first.row && entry.col == first.col) want = entry.value;
    report.failures.push_back(
        CkFailure{identity, std::move(subject), first.row, first.col, want, want + first.value});
}

} // namespace

std::optional<std::size_t> PathBasis::index_of(const CopyPath& path) const {
    auto it = std::lower_bound(paths.begin(), paths.end(), path, basis_less);
    if (it == paths.end() || !(*it == path)) return std::nullopt;
    return static_cast<std::size_t>(it - paths.begin());
}

std::string edge_copy_name(const DiscreteGraph& graph, const EdgeCopy& e) {
    const EdgeClass& cls = graph.edge(e.edge);
    if (!cls.multiplicity.is_omega() && cls.multiplicity.count() == 1) return cls.id;
    return cls.id + "[" + std::to_string(e.copy) + "]";
}

PathBasis lambda_space(const DiscreteGraph& graph, VertexIndex v0, std::size_t max_basis) {
    if (v0 >= graph.vertex_count()) throw PreconditionError("lambda_space: unknown vertex");
    check_finite_path_space(graph, v0);

    PathBasis basis;
    basis.v0 = v0;
    std::vector<CopyPath> layer{CopyPath{v0, v0, {}}};
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), basis_less);
        if (basis.paths.size() + layer.size() > max_basis)
            throw BoundExceeded("path basis exceeds " + std::to_string(max_basis) + " elements", "--max-basis");
        std::vector<CopyPath> next;
        for (const CopyPath& lambda : layer) {
            for (EdgeIndex e : graph.out_edges(lambda.range_vertex)) {
                const EdgeClass& cls = graph.edge(e);
                for (std::size_t k = 0; k < cls.multiplicity.count(); ++k) {
                    CopyPath longer{cls.range, v0, {EdgeCopy{e, k}}};
                    longer.edges.insert(longer.edges.end(), lambda.edges.begin(), lambda.edges.end());
                    next.push_back(std::move(longer));
                }
                if (basis.paths.size() + layer.size() + next.size() > max_basis)
                    throw BoundExceeded("path basis exceeds " + std::to_string(max_basis) + " elements",
                                        "--max-basis");
            }
        }
        basis.paths.insert(basis.paths.end(), layer.begin(), layer.end());
        layer = std::move(next);
    }
    return basis;
}

PathRep build_path_rep(const DiscreteGraph& graph, VertexIndex v0, std::size_t max_basis) {
    PathRep rep;
    rep.basis = lambda_space(graph, v0, max_basis);
    const std::size_t n = rep.basis.size();

    for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
        IntMatrix t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (rep.basis.paths[i].range_vertex == v) t(i, i) = 1;
        rep.t0.emplace(v, std::move(t));
    }
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
        const EdgeClass& cls = graph.edge(e);
        if (cls.multiplicity.is_omega()) continue;
        for (std::size_t k = 0; k < cls.multiplicity.count(); ++k) {
            IntMatrix t(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const CopyPath& lambda = rep.basis.paths[i];
                if (lambda.range_vertex != cls.domain) continue;
                CopyPath longer{cls.range, v0, {EdgeCopy{e, k}}};
                longer.edges.insert(longer.edges.end(), lambda.edges.begin(), lambda.edges.end());
                const auto j = rep.basis.index_of(longer);
                if (!j) throw std::logic_error("build_path_rep: basis not closed under extension");
                t(*j, i) = 1;
            }
            rep.t1.emplace(EdgeCopy{e, k}, std::move(t));
        }
    }
    return rep;
}

bool CkReport::identity_ok(char identity) const {
    return std::none_of(failures.begin(), failures.end(),
                        [&](const CkFailure& f) { return f.identity == identity; });
}

std::vector<std::string> CkReport::failing_vertices_c() const {
    std::vector<std::string> out;
    for (const CkFailure& f : failures)
        if (f.identity == 'c') out.push_back(f.subject);
    return out;
}

CkReport verify_ck_pair(const DiscreteGraph& graph, const PathRep& rep) {
    CkReport report;
    const std::size_t n = rep.basis.size();
    const SparseMatrix zero(n);

    std::map<VertexIndex, SparseMatrix> t0;
    for (const auto& [v, m] : rep.t0) t0.emplace(v, sparse(m));
    std::map<EdgeCopy, SparseMatrix> t1;
    std::map<EdgeCopy, SparseMatrix> t1_adj;
    for (const auto& [e, m] : rep.t1) {
        t1.emplace(e, sparse(m));
        t1_adj.emplace(e, sparse(m.transpose()));
    }
    auto t0_of = [&](VertexIndex v) -> const SparseMatrix& {
        auto it = t0.find(v);
        return it == t0.end() ? zero : it->second;
    };

    for (const auto& [e, adj] : t1_adj) {
        for (const auto& [f, m] : t1) {
            ++report.checks_a;
            const SparseMatrix& expected = e == f ? t0_of(graph.edge(e.edge).domain) : zero;
            compare(report, 'a', edge_copy_name(graph, e) + "," + edge_copy_name(graph, f), adj * m, expected);
        }
    }
    for (const auto& [v, p] : t0) {
        for (const auto& [e, m] : t1) {
            ++report.checks_b;
            const SparseMatrix& expected = graph.edge(e.edge).range == v ? m : zero;
            compare(report, 'b', graph.vertex_name(v) + "," + edge_copy_name(graph, e), p * m, expected);
        }
    }
    const VertexSet regular = classify_vertices(graph).regular;
    regular.for_each([&](VertexIndex v) {
        ++report.checks_c;
        SparseMatrix sum(n);
        for (EdgeIndex e : graph.in_edges(v)) {
            const std::size_t copies = graph.edge(e).multiplicity.count();
            for (std::size_t k = 0; k < copies; ++k) {
                auto it = t1.find(EdgeCopy{e, k});
                if (it != t1.end()) sum = sum + it->second * t1_adj.at(EdgeCopy{e, k});
            }
        }
        compare(report, 'c', graph.vertex_name(v), sum, t0_of(v));
    });
    return report;
}

AdmissiblePair kernel_pair(const DiscreteGraph& graph, const PathRep& rep) {
    const VertexIndex v0 = rep.basis.v0;
    if (!classify_vertices(graph).singular.contains(v0))
        throw PreconditionError("kernel_pair: v0 '" + graph.vertex_name(v0) + "' is regular, not singular");
    VertexSet x0 = graph.empty_set();
    for (const auto& [v, m] : rep.t0)
        if (!m.is_zero()) x0.insert(v);
    if (x0 != positive_orbit(graph, v0))
        throw std::logic_error("kernel_pair: support of T0 differs from the positive orbit of v0");
    VertexSet z = restricted_singular(graph, x0);
    z.insert(v0);
    AdmissiblePair pair{std::move(x0), std::move(z)};
    if (!is_admissible(graph, pair)) throw std::logic_error("kernel_pair: pair is not admissible");
    return pair;
}

std::optional<std::size_t> commutant_dimension(const PathRep& rep, std::size_t max_dim) {
    const std::size_t n = rep.basis.size();
    if (n > max_dim) return std::nullopt;
    constexpr std::int64_t p = 1'000'000'007;
    const std::size_t vars = n * n;

    std::vector<IntMatrix> gens;
    for (const auto& [v, m] : rep.t0) gens.push_back(m);
    for (const auto& [e, m] : rep.t1) {
        gens.push_back(m);
        gens.push_back(m.transpose());
    }

    auto mod = [&](std::int64_t x) { return ((x % p) + p) % p; };
    auto inverse = [&](std::int64_t a) {
        std::int64_t result = 1;
        std::int64_t base = a;
        for (std::int64_t exp = p - 2; exp > 0; exp >>= 1) {
            if (exp & 1) result = result * base % p;
            base = base * base % p;
        }
        return result;
    };

    // pivots[c]: reduced row with leading 1 at column c.
    std::vector<std::vector<std::int64_t>> pivots(vars);
    std::size_t rank = 0;
    for (const IntMatrix& a : gens) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rank + 1 >= vars) return vars - rank;
                // (XA - AX)_{ij} = sum_k X_{ik} A_{kj} - sum_k A_{ik} X_{kj}
                std::vector<std::int64_t> row(vars, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] += a(k, j);
                    row[k * n + j] -= a(i, k);
                }
                bool placed = false;
                for (std::size_t c = 0; c < vars && !placed; ++c) {
                    row[c] = mod(row[c]);
                    if (row[c] == 0) continue;
                    if (!pivots[c].empty()) {
                        const std::int64_t factor = row[c];
                        for (std::size_t d = c; d < vars; ++d) row[d] = mod(row[d] - factor * pivots[c][d] % p);
                        continue;
                    }
                    const std::int64_t inv = inverse(row[c]);
                    for (std::size_t d = c; d < vars; ++d) row[d] = mod(row[d]) * inv % p;
                    pivots[c] = std::move(row);
                    ++rank;
                    placed = true;
                }
            }
        }
    }
    return vars - rank;
}

} // namespace gcalg
