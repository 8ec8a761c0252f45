#pragma once

// Property checks shared by the unit tests and the acceptance binary. Each
// runs one property over a list of graphs and tallies the outcome; the first
// failure is kept as a readable message.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gcalg/af.hpp"
#include "gcalg/classification.hpp"
#include "gcalg/closures.hpp"
#include "gcalg/corpus.hpp"
#include "gcalg/lattice.hpp"
#include "gcalg/orbits.hpp"
#include "gcalg/representation.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

namespace checks {

using gcalg::DiscreteGraph;
using gcalg::VertexSet;
using oracle::Mask;

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0 && cases > 0; }
    Tally& operator+=(const Tally& other) {
        if (failures == 0 && other.failures > 0) first_failure = other.first_failure;
        cases += other.cases;
        failures += other.failures;
        return *this;
    }
};

inline VertexSet set_of(const DiscreteGraph& g, Mask m) { return VertexSet::from_mask(g.vertex_count(), m); }
inline Mask mask_of(const VertexSet& s) { return static_cast<Mask>(s.mask()); }

inline std::string describe(const DiscreteGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " vertices [";
    for (const auto& e : g.edges())
        out << ' ' << g.vertex_name(e.domain) << "->" << g.vertex_name(e.range)
            << (e.multiplicity.is_omega() ? "(w)" : e.multiplicity.count() > 1 ? "(" + std::to_string(e.multiplicity.count()) + ")" : "");
    out << " ]";
    return out.str();
}

// H(V), S(V) against brute-force minimal supersets, for every V.
inline Tally closures(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        for (Mask v = 0; v <= raw.all(); ++v) {
            const auto s = set_of(g, v);
            t.check(mask_of(gcalg::hereditary_closure(g, s)) == raw.brute_hereditary(v), "H: " + describe(g));
            t.check(mask_of(gcalg::saturated_closure(g, s)) == raw.brute_saturated(v), "S: " + describe(g));
        }
    }
    return t;
}

// Complementation and the three forms of negative invariance for positively
// invariant sets; also the largest invariant set avoiding V.
inline Tally complements(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        const Mask sg = raw.singular();
        Mask regular = 0;
        for (std::size_t v = 0; v < raw.n; ++v)
            if (raw.regular(v)) regular |= oracle::Raw::bit(v);
        const auto invariant = raw.invariant_sets();
        for (Mask x = 0; x <= raw.all(); ++x) {
            const auto s = set_of(g, x);
            const auto rest = s.complement();
            t.check(gcalg::is_positively_invariant(g, s) == gcalg::is_hereditary(g, rest), "pos/her: " + describe(g));
            t.check(gcalg::is_negatively_invariant(g, s) == gcalg::is_saturated(g, rest), "neg/sat: " + describe(g));
            t.check(gcalg::is_positively_invariant(g, s) == raw.positively_invariant(x), "pos oracle: " + describe(g));
            t.check(gcalg::is_negatively_invariant(g, s) == raw.negatively_invariant(x), "neg oracle: " + describe(g));
            if (raw.positively_invariant(x)) {
                const bool ni = gcalg::is_negatively_invariant(g, s);
                const bool no_regular_sources = (raw.sources_in(x) & regular) == 0;
                const bool sg_inside = (mask_of(gcalg::restricted_singular(g, s)) & ~sg) == 0;
                t.check(ni == no_regular_sources && ni == sg_inside, "negative invariance forms: " + describe(g));
            }
            Mask avoiding = 0;
            for (Mask y : invariant)
                if ((y & x) == 0) avoiding |= y;
            t.check(mask_of(gcalg::largest_invariant_avoiding(g, s)) == avoiding, "largest avoiding: " + describe(g));
        }
    }
    return t;
}

// For invariant X1, X2 with union X: X_sg is inside (X1)_sg | (X2)_sg.
inline Tally union_singular(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        const auto inv = raw.invariant_sets();
        for (Mask a : inv)
            for (Mask b : inv) {
                const Mask x = raw.singular_in(a | b);
                t.check((x & ~(raw.singular_in(a) | raw.singular_in(b))) == 0, "union sg: " + describe(g));
                t.check(mask_of(gcalg::restricted_singular(g, set_of(g, a | b))) == x, "restricted sg: " + describe(g));
            }
    }
    return t;
}

inline std::set<std::pair<Mask, Mask>> as_masks(const std::vector<gcalg::AdmissiblePair>& pairs) {
    std::set<std::pair<Mask, Mask>> out;
    for (const auto& p : pairs) out.emplace(mask_of(p.x0), mask_of(p.z));
    return out;
}

inline Tally lattice_counts(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        const auto lattice = gcalg::enumerate_admissible_pairs(g);
        const auto brute = raw.admissible_pairs();
        t.check(as_masks(lattice.pairs) == std::set<std::pair<Mask, Mask>>(brute.begin(), brute.end()),
                "admissible pairs: " + describe(g));
    }
    return t;
}

inline Tally prime_pairs(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        t.check(as_masks(gcalg::prime_admissible_pairs(g)) == raw.prime_pairs(), "prime pairs: " + describe(g));
    }
    return t;
}

inline Tally heads(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        std::set<Mask> lib;
        for (const auto& h : gcalg::maximal_heads(g)) lib.insert(mask_of(h.x0));
        const auto brute = raw.maximal_heads();
        t.check(lib == std::set<Mask>(brute.begin(), brute.end()), "maximal heads: " + describe(g));
    }
    return t;
}

inline Tally generated_by_loop(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs)
        t.check(gcalg::is_generated_by_loop(g).value == oracle::Raw(g).generated_by_loop(),
                "generated by a loop: " + describe(g));
    return t;
}

// Free iff every quotient graph is topologically free.
inline Tally freeness(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        bool all = true;
        for (const auto& rho : gcalg::enumerate_admissible_pairs(g).pairs)
            all = all && gcalg::is_topologically_free(gcalg::quotient_graph(g, rho).base).value;
        const bool free = gcalg::is_free(g).value;
        t.check(free == all, "free vs quotients: " + describe(g));
        t.check(!free || gcalg::is_topologically_free(g).value, "free implies topologically free: " + describe(g));
    }
    return t;
}

// minimal & topologically free == minimal & free == minimal & not generated
// by a loop, and is_simple reports that value.
inline Tally simplicity(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const bool minimal = gcalg::is_minimal(g).value;
        const bool ii = minimal && gcalg::is_topologically_free(g).value;
        const bool iii = minimal && gcalg::is_free(g).value;
        const bool iv = minimal && !gcalg::is_generated_by_loop(g).value;
        t.check(ii == iii && iii == iv, "simplicity forms: " + describe(g));
        t.check(gcalg::is_simple(g).value == ii, "is_simple: " + describe(g));
        t.check(!minimal || gcalg::is_topologically_transitive(g).value, "minimal implies transitive: " + describe(g));
    }
    return t;
}

inline Tally transitivity(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        const oracle::Raw raw(g);
        bool brute = raw.n > 0;
        for (std::size_t a = 0; a < raw.n; ++a)
            for (std::size_t b = 0; b < raw.n; ++b) brute = brute && (raw.ancestors(a) & raw.ancestors(b)) != 0;
        const auto f = gcalg::transitivity_forms(g, gcalg::kDefaultMaxVertices, g.vertex_count());
        t.check(f.common_ancestors == brute && f.saturated_intersect == brute && f.top_pair_prime == brute &&
                    f.whole_space_head == brute,
                "transitivity (i)-(iv): " + describe(g));
        t.check(gcalg::is_topologically_transitive(g).value == brute, "transitivity verdict: " + describe(g));
        const bool dense = f.dense_orbit.has_value() && gcalg::orbit_space(g, *f.dense_orbit) == g.all_vertices();
        t.check(dense == brute, "dense orbit: " + describe(g));
    }
    return t;
}

inline Tally row_finite(const std::vector<DiscreteGraph>& graphs) {
    Tally t;
    for (const auto& g : graphs) {
        if (!gcalg::is_row_finite(g)) continue;
        const oracle::Raw raw(g);
        const auto invariant = gcalg::enumerate_invariant_sets(g);
        t.check(gcalg::enumerate_admissible_pairs(g).pairs.size() == invariant.size(), "pair count: " + describe(g));
        const auto sg = gcalg::classify_vertices(g).singular;
        for (const auto& x : invariant)
            t.check(gcalg::restricted_singular(g, x) == (x & sg), "X_sg: " + describe(g));
        t.check(gcalg::row_finite_bijection_check(g), "bijection: " + describe(g));
    }
    return t;
}

// Path representations over acyclic graphs, split by the kind of base vertex.
struct RepTally {
    Tally singular;          // every identity at singular v0
    Tally regular;           // every identity at regular v0
    Tally regular_ab;        // (a) and (b) at regular v0
    Tally regular_c_only_v0; // (c) fails at v0 alone, at the length-0 path
    Tally kernel;            // kernel pair at singular v0
    Tally partition;         // T0 is a family of orthogonal projections summing to 1
    Tally mutants;           // corrupted representations are rejected
};

inline bool detected(const DiscreteGraph& g, const gcalg::PathRep& rep) { return !gcalg::verify_ck_pair(g, rep).ok(); }

inline void mutate(const DiscreteGraph& g, const gcalg::PathRep& clean, Tally& t) {
    const std::string where = describe(g);
    // One flipped entry per edge copy in each direction: a lost 1 breaks the
    // isometry (a), a stray 1 breaks (a) or (b).
    for (const auto& [copy, m] : clean.t1) {
        for (const int from : {1, 0}) {
            bool done = false;
            for (std::size_t i = 0; i < m.rows() && !done; ++i)
                for (std::size_t j = 0; j < m.cols() && !done; ++j) {
                    if (m(i, j) != from) continue;
                    auto rep = clean;
                    rep.t1.at(copy)(i, j) = 1 - from;
                    t.check(detected(g, rep), "T1 flip: " + where);
                    done = true;
                }
        }
    }
    // Dropping a basis vector from the projection of a vertex that receives
    // an edge breaks (b) at that edge.
    for (const auto& e : g.edges()) {
        const auto& p = clean.t0.at(e.range);
        for (std::size_t i = 0; i < p.rows(); ++i) {
            if (p(i, i) == 0 || clean.basis.paths[i].length() == 0) continue;
            auto rep = clean;
            rep.t0.at(e.range)(i, i) = 0;
            t.check(detected(g, rep), "T0 drop: " + where);
            break;
        }
    }
}

inline RepTally representations(const std::vector<DiscreteGraph>& graphs, bool with_mutants = true) {
    RepTally t;
    for (const auto& g : graphs) {
        const auto cls = gcalg::classify_vertices(g);
        for (gcalg::VertexIndex v0 = 0; v0 < g.vertex_count(); ++v0) {
            const auto rep = gcalg::build_path_rep(g, v0);
            const auto report = gcalg::verify_ck_pair(g, rep);
            const std::string where = describe(g) + " at " + g.vertex_name(v0);

            const std::size_t n = rep.basis.size();
            gcalg::IntMatrix sum(n, n);
            bool projections = true;
            for (const auto& [v, p] : rep.t0) {
                projections = projections && p * p == p && p.transpose() == p;
                sum = sum + p;
            }
            t.partition.check(projections && sum == gcalg::IntMatrix::identity(n), "partition: " + where);

            if (cls.singular.contains(v0)) {
                t.singular.check(report.ok(), "singular: " + where);
                const auto kp = gcalg::kernel_pair(g, rep);
                const auto x0 = gcalg::positive_orbit(g, v0);
                auto z = gcalg::restricted_singular(g, x0);
                z.insert(v0);
                t.kernel.check(kp.x0 == x0 && kp.z == z && gcalg::is_admissible(g, kp), "kernel: " + where);
                if (with_mutants) mutate(g, rep, t.mutants);
            } else {
                t.regular.check(report.ok(), "regular: " + where);
                t.regular_ab.check(report.identity_ok('a') && report.identity_ok('b'), "regular (a)/(b): " + where);
                const bool only_v0 = report.failing_vertices_c() == std::vector<std::string>{g.vertex_name(v0)} &&
                                     report.failures.size() == 1 && report.failures[0].row == 0 &&
                                     report.failures[0].col == 0;
                t.regular_c_only_v0.check(only_v0, "regular (c): " + where);
            }
        }
    }
    return t;
}

} // namespace checks
