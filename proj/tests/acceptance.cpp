// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance [path-to-gcalg-cli]
// Exit status 1 if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>

#include "checks.hpp"
#include "gcalg/io.hpp"

using namespace checks;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 20240501;
constexpr std::size_t kRandomGraphs = 600;     // criterion 1 asks for at least 500
constexpr std::size_t kAcyclicGraphs = 400;
constexpr double kClosureSeconds = 30.0;
constexpr double kRepresentationSeconds = 10.0;
constexpr std::size_t kCensusMaxN = 5;
constexpr std::size_t kUnitsMaxN = 4;
constexpr std::size_t kSequenceMaxM = 10;

int failures = 0;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, const std::string& title, bool pass, const std::vector<std::string>& details) {
    std::cout << "criterion " << (id < 10 ? " " : "") << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title
              << '\n';
    for (const auto& d : details) std::cout << "    " << d << '\n';
    if (!pass) ++failures;
}

std::string summary(const std::string& label, const Tally& t) {
    std::ostringstream out;
    out << label << ": " << t.cases - t.failures << "/" << t.cases << " hold";
    if (t.failures > 0) out << "; first failure " << t.first_failure;
    return out.str();
}

std::string fixed(double x) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << x;
    return out.str();
}

std::string names(const DiscreteGraph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](gcalg::VertexIndex v) {
        out += (first ? "" : ",") + g.vertex_name(v);
        first = false;
    });
    return out + "}";
}

std::vector<DiscreteGraph> corpus_graphs() {
    std::vector<DiscreteGraph> out;
    for (const auto& name : gcalg::corpus::standard_names()) out.push_back(gcalg::corpus::by_name(name));
    return out;
}

std::string run_cli(const std::string& command) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto random = testgen::sample(kRandomGraphs, kSeed);
    const auto acyclic = testgen::sample(kAcyclicGraphs, kSeed + 1, testgen::acyclic_family());
    const auto corpus = corpus_graphs();
    std::cout << "random family: " << random.size() << " graphs (<= 5 vertices, <= 8 edge classes, omega p = 0.2), seed "
              << kSeed << "\nacyclic family: " << acyclic.size() << " graphs (<= 6 vertices, no omega), seed "
              << kSeed + 1 << "\n\n";

    {
        const auto start = Clock::now();
        const auto t = closures(random);
        const double s = seconds_since(start);
        report(1, "H(V), S(V) equal brute-force minimal supersets", t.ok() && s < kClosureSeconds,
               {summary("(graph, V) checks", t), "time " + fixed(s) + " s (limit " + fixed(kClosureSeconds) + " s)"});
    }
    {
        const auto t = complements(random);
        report(2, "complementation and negative-invariance equivalences", t.ok(), {summary("checks", t)});
    }
    {
        const auto g = gcalg::corpus::omega();
        const auto x1 = VertexSet(g.vertex_count(), {*g.find_vertex("w")});
        const auto x2 = VertexSet(g.vertex_count(), {*g.find_vertex("v"), *g.find_vertex("w")});
        const auto s1 = gcalg::restricted_singular(g, x1);
        const auto s2 = gcalg::restricted_singular(g, x2);
        const bool invariant = gcalg::is_invariant(g, x1) && gcalg::is_invariant(g, x2);
        const bool pass = invariant && names(g, s1) == "{w}" && names(g, s2) == "{v}" && !s1.is_subset_of(s2);
        report(3, "restricted singular sets on the omega graph are not monotone", pass,
               {"X1 = {w}: (X1)_sg = " + names(g, s1), "X2 = {v,w}: (X2)_sg = " + names(g, s2),
                std::string("X1 inside X2 but (X1)_sg inside (X2)_sg: ") + (s1.is_subset_of(s2) ? "yes" : "no")});
    }
    {
        const auto t = prime_pairs(random);
        report(4, "prime pairs (breaking vertices + maximal heads) equal the primality filter", t.ok(),
               {summary("graphs", t)});
    }
    {
        const auto t = freeness(random);
        report(5, "free iff every quotient graph is topologically free", t.ok(), {summary("checks", t)});
    }
    {
        auto t = simplicity(random);
        t += simplicity(corpus);
        Tally examples;
        examples.check(gcalg::is_simple(gcalg::corpus::edge()).value, "edge graph simple");
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto v = gcalg::is_simple(gcalg::corpus::cycle(n));
            examples.check(!v.value && v.witness.note == "generated by a loop", "cycle:" + std::to_string(n));
        }
        report(6, "simplicity forms agree; edge simple, cycles not (generated by a loop)", t.ok() && examples.ok(),
               {summary("random + corpus checks", t), summary("named examples", examples)});
    }
    {
        const auto t = transitivity(random);
        report(7, "transitivity forms (i)-(iv) agree; dense negative orbit iff transitive", t.ok(),
               {summary("checks", t)});
    }
    {
        Tally t;
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto primes = gcalg::prime_ideals(gcalg::corpus::cycle(n));
            const auto* c = primes.size() == 1 ? std::get_if<gcalg::CircleFamilyPrime>(&primes[0]) : nullptr;
            t.check(c != nullptr && c->periodic_class.period == n, "cycle:" + std::to_string(n));
        }
        {
            const auto g = gcalg::corpus::loop_entrance();
            const auto primes = gcalg::prime_ideals(g);
            std::multiset<std::string> got;
            for (const auto& p : primes) {
                if (const auto* c = std::get_if<gcalg::CircleFamilyPrime>(&p))
                    got.insert("circle period " + std::to_string(c->periodic_class.period));
                else if (const auto* h = std::get_if<gcalg::AperiodicHeadPrime>(&p))
                    got.insert("aperiodic head " + names(g, h->x0));
                else
                    got.insert("breaking vertex");
            }
            t.check(got == std::multiset<std::string>{"circle period 1", "aperiodic head {a,b}"}, "loop_entrance");
        }
        {
            const auto primes = gcalg::prime_ideals(gcalg::corpus::disjoint_cycles({2, 3}));
            std::multiset<std::size_t> periods;
            bool only_circles = true;
            for (const auto& p : primes) {
                if (const auto* c = std::get_if<gcalg::CircleFamilyPrime>(&p)) periods.insert(c->periodic_class.period);
                else only_circles = false;
            }
            t.check(only_circles && periods == std::multiset<std::size_t>{2, 3}, "cycles:2,3");
        }
        report(8, "prime ideal census of cycles, loop with entrance, C2 + C3", t.ok(), {summary("graphs", t)});
    }
    {
        const auto start = Clock::now();
        const auto t = representations(acyclic);
        const double s = seconds_since(start);
        Tally all = t.singular;
        all += t.regular;
        const bool pass = all.ok() && t.mutants.ok() && s < kRepresentationSeconds;
        report(9, "path representations satisfy (a)-(c) at every v0; mutants detected", pass,
               {summary("all (graph, v0)", all), summary("singular v0", t.singular), summary("regular v0", t.regular),
                summary("regular v0, identities (a) and (b)", t.regular_ab),
                summary("regular v0, (c) fails only at v0 on the length-0 path", t.regular_c_only_v0),
                summary("T0 partition of unity", t.partition), summary("mutants detected", t.mutants),
                "time " + fixed(s) + " s (limit " + fixed(kRepresentationSeconds) + " s)",
                "at regular v0 the length-0 path lies in the range of no T1(e), so T0(v0) != sum T1 T1^T there;",
                "the representation on Lambda_{v0} is a Cuntz-Krieger pair only for singular v0"});
    }
    {
        const auto t = representations(acyclic, false).kernel;
        report(10, "kernel pair at singular v0 is (Orb+(v0), X_sg | {v0}) and admissible", t.ok(),
               {summary("(graph, singular v0)", t)});
    }
    {
        Tally seq, census, units;
        for (std::size_t m = 0; m <= kSequenceMaxM; ++m)
            seq.check(gcalg::a_sequence(m) == oracle::factorial_sum(m), "a(" + std::to_string(m) + ")");
        const bool pinned = gcalg::a_sequence(0) == 1 && gcalg::a_sequence(1) == 2 && gcalg::a_sequence(2) == 5 &&
                            gcalg::a_sequence(3) == 16;
        std::size_t relation_checks = 0;
        for (std::size_t n = 0; n <= kCensusMaxN; ++n) {
            const auto r = gcalg::af_block_check(n, kUnitsMaxN);
            for (const auto& b : r.blocks)
                census.check(b.path_count == b.dimension && b.dimension == oracle::removal_sequences(b.size),
                             "n=" + std::to_string(n) + " " + b.subset);
            if (n <= kUnitsMaxN) {
                units.check(r.matrix_units_checked && r.ok(), "matrix units n=" + std::to_string(n));
                relation_checks += r.relation_checks;
            }
        }
        report(11, "a(m) = sum m!/k!; path census; matrix unit relations", seq.ok() && pinned && census.ok() && units.ok(),
               {summary("a(m) for m <= 10", seq), std::string("a(0..3) = 1, 2, 5, 16: ") + (pinned ? "yes" : "no"),
                summary("subsets of {1..n}, n <= 5", census), summary("matrix unit systems, n <= 4", units),
                "unit products compared: " + std::to_string(relation_checks)});
    }
    {
        auto t = row_finite(random);
        t += row_finite(corpus);
        report(12, "row-finite: #pairs = #invariant sets and X_sg = X & E0_sg", t.ok(), {summary("checks", t)});
    }
    {
        Tally t;
        std::string mode;
        if (!cli.empty()) {
            mode = "two CLI runs of analyze per corpus graph";
            for (const auto& name : gcalg::corpus::standard_names()) {
                const std::string cmd = "\"" + cli + "\" analyze --corpus " + name + " 2>&1";
                const auto a = run_cli(cmd);
                const auto b = run_cli(cmd);
                t.check(!a.empty() && a == b, name);
            }
        } else {
            mode = "two in-process analysis reports per corpus graph";
            for (const auto& name : gcalg::corpus::standard_names()) {
                const auto g = gcalg::corpus::by_name(name);
                const auto a = gcalg::io::dump(gcalg::io::analysis_report(g, {}));
                const auto b = gcalg::io::dump(gcalg::io::analysis_report(g, {}));
                t.check(a == b, name);
            }
        }
        report(13, "analyze output is byte-identical across runs", t.ok(), {mode, summary("corpus graphs", t)});
    }

    std::cout << '\n' << (13 - failures) << "/13 criteria pass\n";
    return failures == 0 ? 0 : 1;
}
