#include "gcalg/af.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "gcalg/errors.hpp"
#include "gcalg/matrix.hpp"
#include "gcalg/representation.hpp"

namespace gcalg {

namespace {

// Subsets of {1..n} in canonical order: by size, then members.
std::vector<std::uint64_t> ordered_subsets(std::size_t n) {
    std::vector<VertexSet> sets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) sets.push_back(VertexSet::from_mask(n, mask));
    std::sort(sets.begin(), sets.end());
    std::vector<std::uint64_t> out;
    for (const VertexSet& s : sets) out.push_back(s.mask());
    return out;
}

// The generators of a representation as sparse matrices, indexed by graph
// vertex / edge index.
struct SparseFamily {
    std::size_t dim = 0;
    std::vector<SparseMatrix> t0;
    std::vector<SparseMatrix> t1;
};

SparseFamily from_rep(const DiscreteGraph& graph, const PathRep& rep) {
    SparseFamily f;
    f.dim = rep.basis.size();
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v) f.t0.push_back(SparseMatrix::from_dense(rep.t0.at(v)));
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e)
        f.t1.push_back(SparseMatrix::from_dense(rep.t1.at(EdgeCopy{e, 0})));
    return f;
}

SparseMatrix shifted(const SparseMatrix& m, std::size_t offset, std::size_t dim) {
    std::vector<SparseMatrix::Entry> entries;
    for (const auto& e : m.entries()) entries.push_back({e.row + offset, e.col + offset, e.value});
    return SparseMatrix::from_entries(dim, std::move(entries));
}

SparseFamily direct_sum(const std::vector<SparseFamily>& parts) {
    SparseFamily sum;
    for (const SparseFamily& p : parts) sum.dim += p.dim;
    const std::size_t vertices = parts.front().t0.size();
    const std::size_t edges = parts.front().t1.size();
    sum.t0.assign(vertices, SparseMatrix(sum.dim));
    sum.t1.assign(edges, SparseMatrix(sum.dim));
    std::size_t offset = 0;
    for (const SparseFamily& p : parts) {
        for (std::size_t v = 0; v < vertices; ++v) sum.t0[v] = sum.t0[v] + shifted(p.t0[v], offset, sum.dim);
        for (std::size_t e = 0; e < edges; ++e) sum.t1[e] = sum.t1[e] + shifted(p.t1[e], offset, sum.dim);
        offset += p.dim;
    }
    return sum;
}

struct UnitSystem {
    // units[b][y * count + z] for block b (subset order), count = paths in b.
    std::vector<std::vector<SparseMatrix>> units;
    std::vector<std::size_t> counts;
};

UnitSystem build_units(const DiscreteGraph& graph, const SparseFamily& fam, std::uint64_t v0_mask,
                       const std::vector<std::uint64_t>& subsets) {
    UnitSystem sys;
    for (std::uint64_t v_mask : subsets) {
        const VertexIndex v = *graph.find_vertex(subset_name(v_mask));
        SparseMatrix q = fam.t0[v];
        for (std::size_t bit = 0; bit < 64; ++bit) {
            const std::uint64_t x = std::uint64_t{1} << bit;
            if (!(v0_mask & x) || (v_mask & x)) continue;
            const EdgeIndex e = *graph.find_edge(subset_edge_name(bit + 1, v_mask | x));
            q = q - fam.t1[e] * fam.t1[e].transpose();
        }
        std::vector<SparseMatrix> s;
        for (const CopyPath& y : lambda_space(graph, v).paths) {
            SparseMatrix m = fam.t0[v];
            for (auto it = y.edges.rbegin(); it != y.edges.rend(); ++it) m = fam.t1[it->edge] * m;
            s.push_back(std::move(m));
        }
        std::vector<SparseMatrix> block;
        for (const SparseMatrix& sy : s) {
            const SparseMatrix left = sy * q;
            for (const SparseMatrix& sz : s) block.push_back(left * sz.transpose());
        }
        sys.counts.push_back(s.size());
        sys.units.push_back(std::move(block));
    }
    return sys;
}

// Allocation-light product for the quadratic relation sweep.
void multiply_into(const SparseMatrix& a, const SparseMatrix& b, std::vector<SparseMatrix::Entry>& out) {
    out.clear();
    for (const auto& x : a.entries())
        for (const auto& y : b.entries())
            if (x.col == y.row) out.push_back({x.row, y.col, x.value * y.value});
    if (out.size() > 1) {
        std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
            return std::tie(l.row, l.col) < std::tie(r.row, r.col);
        });
        std::vector<SparseMatrix::Entry> merged;
        for (const auto& e : out) {
            if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
                merged.back().value += e.value;
            else
                merged.push_back(e);
        }
        out = std::move(merged);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.value == 0; }), out.end());
}

} // namespace

std::string subset_name(std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (std::size_t bit = 0; bit < 64; ++bit) {
        if (!((mask >> bit) & 1U)) continue;
        if (!first) out += ',';
        out += std::to_string(bit + 1);
        first = false;
    }
    return out + "}";
}

std::string subset_edge_name(std::size_t x, std::uint64_t v_mask) {
    return "(" + std::to_string(x) + ";" + subset_name(v_mask) + ")";
}

DiscreteGraph subset_graph(std::size_t n, std::size_t max_n) {
    if (n > max_n || n >= 63)
        throw BoundExceeded("subset graph on " + std::to_string(n) + " elements (2^" + std::to_string(n) +
                                " vertices) exceeds the bound of " + std::to_string(max_n) + " elements",
                            "--max-vertices");
    GraphSpec spec;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        spec.vertices.push_back(subset_name(mask));
        for (std::size_t bit = 0; bit < n; ++bit)
            if ((mask >> bit) & 1U)
                spec.edges.push_back(EdgeSpec{subset_edge_name(bit + 1, mask), subset_name(mask),
                                              subset_name(mask & ~(std::uint64_t{1} << bit)),
                                              Multiplicity::finite(1)});
    }
    return DiscreteGraph::validate(spec);
}

std::uint64_t a_sequence(std::size_t m) {
    if (m > 20) throw std::overflow_error("a_sequence: a(m) overflows 64 bits for m > 20");
    std::uint64_t a = 1;
    for (std::uint64_t k = 1; k <= m; ++k) a = k * a + 1;
    return a;
}

AfBlockReport af_block_check(std::size_t n, std::size_t max_units_n, std::size_t max_n, std::size_t max_basis) {
    const DiscreteGraph graph = subset_graph(n, max_n);
    const std::uint64_t v0_mask = (std::uint64_t{1} << n) - 1;
    const std::vector<std::uint64_t> subsets = ordered_subsets(n);

    AfBlockReport report;
    report.n = n;
    report.v0 = subset_name(v0_mask);
    report.census_ok = true;
    for (std::uint64_t mask : subsets) {
        AfBlock block;
        block.subset = subset_name(mask);
        block.size = static_cast<std::size_t>(std::popcount(mask));
        block.path_count = lambda_space(graph, *graph.find_vertex(block.subset), max_basis).size();
        block.dimension = a_sequence(block.size);
        report.census_ok = report.census_ok && block.path_count == block.dimension;
        report.total_dimension += block.dimension;
        report.blocks.push_back(std::move(block));
    }
    const VertexIndex v0 = *graph.find_vertex(report.v0);
    report.lambda_v0_size = lambda_space(graph, v0, max_basis).size();
    if (n > max_units_n) return report;

    report.matrix_units_checked = true;
    std::vector<SparseFamily> parts;
    for (std::uint64_t mask : subsets)
        parts.push_back(from_rep(graph, build_path_rep(graph, *graph.find_vertex(subset_name(mask)))));
    const SparseFamily sum = direct_sum(parts);
    const UnitSystem sys = build_units(graph, sum, v0_mask, subsets);

    // Flatten: unit (b, y, z) at offset[b] + y * count_b + z.
    std::vector<const SparseMatrix*> flat;
    std::vector<std::size_t> offset;
    for (const auto& block : sys.units) {
        offset.push_back(flat.size());
        for (const SparseMatrix& u : block) flat.push_back(&u);
    }
    report.matrix_unit_count = flat.size();

    std::vector<SparseMatrix::Entry> product;
    for (std::size_t b = 0; b < sys.units.size(); ++b) {
        const std::size_t cb = sys.counts[b];
        for (std::size_t y = 0; y < cb; ++y)
            for (std::size_t z = 0; z < cb; ++z) {
                const SparseMatrix& u = sys.units[b][y * cb + z];
                for (std::size_t b2 = 0; b2 < sys.units.size(); ++b2) {
                    const std::size_t c2 = sys.counts[b2];
                    for (std::size_t y2 = 0; y2 < c2; ++y2)
                        for (std::size_t z2 = 0; z2 < c2; ++z2) {
                            ++report.relation_checks;
                            multiply_into(u, sys.units[b2][y2 * c2 + z2], product);
                            const bool linked = b == b2 && z == y2;
                            const bool ok = linked ? product == sys.units[b][y * cb + z2].entries() : product.empty();
                            if (!ok) ++report.relation_failures;
                        }
                }
            }
    }

    SparseMatrix diagonal(sum.dim);
    report.units_rank_one = true;
    for (std::size_t b = 0; b < sys.units.size(); ++b)
        for (std::size_t y = 0; y < sys.counts[b]; ++y) {
            const SparseMatrix& u = sys.units[b][y * sys.counts[b] + y];
            report.units_rank_one = report.units_rank_one && u.trace() == 1;
            diagonal = diagonal + u;
        }
    report.units_sum_to_identity = diagonal == SparseMatrix::identity(sum.dim);

    // Single representation on Lambda_{v0}.
    const SparseFamily single = from_rep(graph, build_path_rep(graph, v0));
    const UnitSystem irreducible = build_units(graph, single, v0_mask, subsets);
    bool ok = true;
    for (std::size_t b = 0; b + 1 < irreducible.units.size(); ++b)
        for (const SparseMatrix& u : irreducible.units[b]) ok = ok && u.is_zero();
    const std::size_t top = irreducible.units.size() - 1;
    SparseMatrix top_diag(single.dim);
    for (std::size_t y = 0; y < irreducible.counts[top]; ++y)
        top_diag = top_diag + irreducible.units[top][y * irreducible.counts[top] + y];
    report.irreducible_block_ok = ok && irreducible.counts[top] == single.dim &&
                                  top_diag == SparseMatrix::identity(single.dim);
    return report;
}

} // namespace gcalg
