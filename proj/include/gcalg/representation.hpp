#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcalg/lattice.hpp"
#include "gcalg/matrix.hpp"

namespace gcalg {

inline constexpr std::size_t kDefaultMaxBasis = 4096;

// One of the parallel edges of a finite edge class.
struct EdgeCopy {
    EdgeIndex edge = 0;
    std::size_t copy = 0;

    friend auto operator<=>(const EdgeCopy&, const EdgeCopy&) = default;
};

// A path whose edges are individual parallel copies. Same conventions as
// Path: edges[0] is e1, the last edge taken.
struct CopyPath {
    VertexIndex range_vertex = 0;
    VertexIndex domain_vertex = 0;
    std::vector<EdgeCopy> edges;

    std::size_t length() const noexcept { return edges.size(); }

    friend bool operator==(const CopyPath&, const CopyPath&) = default;
};

// Lambda_{v0}: every finite path with domain v0, ordered by length and then
// edges lexicographically. paths[0] is the length-0 path v0.
struct PathBasis {
    VertexIndex v0 = 0;
    std::vector<CopyPath> paths;

    std::size_t size() const noexcept { return paths.size(); }
    // Position of a path in the basis, if present.
    std::optional<std::size_t> index_of(const CopyPath& path) const;
};

// Throws PreconditionError("infinite path space: ...") when a cycle or an
// omega edge class is reachable from v0, naming the witness, and
// BoundExceeded("--max-basis") when the basis would exceed max_basis.
PathBasis lambda_space(const DiscreteGraph& graph, VertexIndex v0, std::size_t max_basis = kDefaultMaxBasis);

// T0(v) is the diagonal projection onto {lambda : r(lambda) = v}; T1(e, k)
// sends delta_lambda to delta_{e lambda} when d(e) = r(lambda). Every vertex
// gets a T0 entry; T1 has one entry per copy of every finite edge class.
// Omega classes are never reachable here and act as zero; they are omitted.
struct PathRep {
    PathBasis basis;
    std::map<VertexIndex, IntMatrix> t0;
    std::map<EdgeCopy, IntMatrix> t1;
};

PathRep build_path_rep(const DiscreteGraph& graph, VertexIndex v0, std::size_t max_basis = kDefaultMaxBasis);

struct CkFailure {
    char identity = 'a'; // 'a', 'b' or 'c'
    std::string subject; // the edge copies or vertex involved
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t expected = 0;
    std::int64_t actual = 0;
};

struct CkReport {
    std::size_t checks_a = 0;
    std::size_t checks_b = 0;
    std::size_t checks_c = 0;
    std::vector<CkFailure> failures; // first mismatching entry per failed check

    bool ok() const noexcept { return failures.empty(); }
    bool identity_ok(char identity) const;
    // Vertices named in failures of identity (c).
    std::vector<std::string> failing_vertices_c() const;
};

// Exact checks over the basis:
//   (a) T1(e)^T T1(e') = [e = e'] T0(d(e))
//   (b) T0(v) T1(e) = [v = r(e)] T1(e)
//   (c) T0(v) = sum_{r(e) = v} T1(e) T1(e)^T   for every regular v.
// On Lambda_{v0} the length-0 path v0 lies outside the range of every T1,
// so (c) holds at v0 exactly when v0 is singular.
CkReport verify_ck_pair(const DiscreteGraph& graph, const PathRep& rep);

// (X0, X0_sg | {v0}) with X0 = {v : T0(v) != 0}. Throws PreconditionError if
// v0 is regular; std::logic_error if X0 differs from Orb+(v0) or the pair is
// not admissible.
AdmissiblePair kernel_pair(const DiscreteGraph& graph, const PathRep& rep);

// Informational: dimension of the commutant of {T0, T1, T1^T}, computed
// modulo a large prime. 1 means the matrix algebra is all of M_N. nullopt
// when N exceeds max_dim.
std::optional<std::size_t> commutant_dimension(const PathRep& rep, std::size_t max_dim = 24);

std::string edge_copy_name(const DiscreteGraph& graph, const EdgeCopy& e);

} // namespace gcalg
