// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alphabound/augment.hpp"
#include "alphabound/bounds.hpp"
#include "alphabound/cli.hpp"
#include "alphabound/extremal.hpp"
#include "alphabound/fuzz.hpp"
#include "alphabound/greedy.hpp"
#include "alphabound/io.hpp"
#include "alphabound/oracle.hpp"

using namespace alphabound;

namespace {

struct Tally {
    long long checked = 0;
    long long violations = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        ++violations;
        if (first_failure.empty()) first_failure = what;
    }
};

struct CorpusResults {
    Tally sandwich;  // criterion 1
    Tally refined;   // criterion 2
    Tally lemma;     // criterion 8
};

void check_connected_instance(const Graph& g, CorpusResults& res) {
    int n = g.num_vertices();
    int k = g.max_degree();
    auto exact = alpha_exact(g);

    ++res.sandwich.checked;
    if (exact.alpha < lower_bound_connected(n, k) ||
        exact.alpha > upper_bound_connected(n, k)) {
        res.sandwich.fail("bounds missed alpha on n=" + std::to_string(n));
    }

    ++res.lemma.checked;
    auto check = degree_sum_check(g, exact.witness);
    if (!check.ok || check.sum < n - 1) {
        res.lemma.fail("degree sum below threshold on n=" + std::to_string(n));
    }

    auto cls = classify(g);
    if (cls != GraphClass::Complete && cls != GraphClass::Cycle) {
        ++res.refined.checked;
        if (exact.alpha < refined_lower_bound(n, k)) {
            res.refined.fail("alpha below refined bound on n=" + std::to_string(n));
        }
        auto cert = solve_connected(g);
        if (!verify_certificate(g, cert) || cert.tier != Tier::Refined) {
            res.refined.fail("certificate failed on n=" + std::to_string(n));
        }
    }
}

CorpusResults sweep_corpus() {
    CorpusResults res;
    // every labeled connected graph on 2..7 vertices
    for (int n = 2; n <= 7; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        }
        int p = static_cast<int>(pairs.size());
        for (uint32_t mask = 0; mask < (uint32_t{1} << p); ++mask) {
            // quick connectivity filter on adjacency masks
            uint32_t adj[8] = {};
            for (int e = 0; e < p; ++e) {
                if (mask & (uint32_t{1} << e)) {
                    adj[pairs[static_cast<size_t>(e)].first] |=
                        uint32_t{1} << pairs[static_cast<size_t>(e)].second;
                    adj[pairs[static_cast<size_t>(e)].second] |=
                        uint32_t{1} << pairs[static_cast<size_t>(e)].first;
                }
            }
            uint32_t seen = uint32_t{1} << 1;
            uint32_t frontier = seen;
            while (frontier != 0) {
                uint32_t next = 0;
                for (int v = 1; v <= n; ++v) {
                    if (frontier & (uint32_t{1} << v)) next |= adj[v];
                }
                frontier = next & ~seen;
                seen |= next;
            }
            bool connected = true;
            for (int v = 1; v <= n; ++v) {
                if (!(seen & (uint32_t{1} << v))) { connected = false; break; }
            }
            if (!connected) continue;
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < p; ++e) {
                if (mask & (uint32_t{1} << e)) edges.push_back(pairs[static_cast<size_t>(e)]);
            }
            check_connected_instance(Graph(n, edges), res);
        }
    }
    // 10,000 fuzzed connected graphs with 8 <= n <= 20
    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<int> size(8, 20);
    std::uniform_real_distribution<double> density(0.0, 0.3);
    for (int i = 0; i < 10000; ++i) {
        check_connected_instance(random_connected_graph(rng, size(rng), density(rng)), res);
    }
    return res;
}

bool report(int id, const std::string& name, const Tally& t) {
    bool pass = t.violations == 0;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " ("
              << t.checked << " checks, " << t.violations << " violations";
    if (!pass) std::cout << "; first: " << t.first_failure;
    std::cout << ")\n";
    return pass;
}

Tally criterion3() {
    Tally t;
    for (int n = 3; n <= 15; ++n) {
        for (int k = 2; k < n; ++k) {
            ++t.checked;
            if (alpha_exact(gen_upper_extremal(n, k)).alpha != upper_bound_connected(n, k)) {
                t.fail("star chain n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
    }
    return t;
}

Tally criterion4() {
    Tally t;
    for (int n = 3; n <= 15; ++n) {
        for (int k = 2; k < n; ++k) {
            ++t.checked;
            int alpha = alpha_exact(gen_lower_extremal(n, k)).alpha;
            int expected = refined_lower_bound(n, k);
            bool ok = alpha == expected;
            if ((n - 1) % k != 0) {
                ok = ok && alpha == lower_bound_connected(n, k);
            } else {
                ok = ok && alpha == (n - 1) / k + 1;
            }
            if (!ok) t.fail("clique chain n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return t;
}

Tally criterion5() {
    Tally t;
    for (int n = 3; n <= 15; ++n) {
        ++t.checked;
        Graph c = gen_basic(BasicFamily::Cycle, n);
        int expected = (n - 1 + 1) / 2;  // ceil((n-1)/2)
        auto cert = solve_connected(c);
        if (alpha_exact(c).alpha != expected ||
            static_cast<int>(cert.set.size()) != expected) {
            t.fail("cycle n=" + std::to_string(n));
        }
    }
    for (int n = 2; n <= 12; ++n) {
        ++t.checked;
        Graph c = gen_basic(BasicFamily::Complete, n);
        auto cert = solve_connected(c);
        if (alpha_exact(c).alpha != 1 || cert.set.size() != 1) {
            t.fail("complete n=" + std::to_string(n));
        }
    }
    return t;
}

Tally criterion6() {
    Tally t;
    for (int m = 1; m <= 5; ++m) {
        ++t.checked;
        Graph g = gen_circulant_example(m);
        std::vector<int> set{1, 2 * m + 2};
        bool ok = is_maximal_independent(g, set);
        ok = ok && lower_bound_connected(4 * m + 2, 2 * m) == 3 && 2 < 3;
        if (!ok) t.fail("circulant m=" + std::to_string(m));
    }
    return t;
}

Tally criterion7() {
    Tally t;
    ++t.checked;
    Graph g1(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {5, 6}, {5, 7}, {6, 7}});
    auto trace1 = greedy_expand(g1);
    auto out1 = descend(g1, trace1);
    bool ok1 = out1.levels.size() == 1 &&
               out1.levels[0] == LevelRecord{2, 5, 2, 6, 3, true} && out1.case_one &&
               out1.r == 2 && out1.x == 2 && out1.x_prime == 4 &&
               ascend(g1, trace1, out1) == std::vector<int>{2, 4, 6} &&
               solve_connected(g1).set == std::vector<int>{2, 4, 6} &&
               solve_connected(g1).branch == Branch::DescentCaseI;
    if (!ok1) t.fail("Case I trace");

    ++t.checked;
    Graph g2(7, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {2, 5}, {3, 6}, {5, 6},
                 {5, 7}, {6, 7}});
    auto trace2 = greedy_expand(g2);
    auto out2 = descend(g2, trace2);
    bool ok2 = out2.levels.size() == 1 &&
               out2.levels[0] == LevelRecord{2, 5, 2, 6, 3, true} && !out2.case_one &&
               out2.r == 2 && out2.w_double_prime == 7 &&
               ascend(g2, trace2, out2) == std::vector<int>{2, 3, 7} &&
               solve_connected(g2).set == std::vector<int>{2, 3, 7} &&
               solve_connected(g2).branch == Branch::DescentCaseII;
    if (!ok2) t.fail("Case II trace");
    return t;
}

Tally criterion9() {
    Tally t;
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> size(1, 25);
    std::uniform_real_distribution<double> density(0.0, 0.3);
    for (int i = 0; i < 1000; ++i) {
        ++t.checked;
        Graph g = random_graph(rng, size(rng), density(rng));
        auto report = bounds_report(g);
        int alpha = alpha_exact(g).alpha;
        if (alpha < report.aggregate_lower || alpha > report.aggregate_upper) {
            t.fail("aggregate bounds missed alpha, instance " + std::to_string(i));
        }
    }
    return t;
}

Tally criterion10() {
    Tally t;
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status = run_command(args, out, err);
        return std::make_pair(status, out.str() + err.str());
    };

    // solve determinism on a generated instance
    ++t.checked;
    {
        std::string path = "acceptance_l10_3.txt";
        std::ofstream(path) << serialize_graph(gen_lower_extremal(10, 3),
                                               GraphFormat::EdgeList);
        auto a = run({"solve", path});
        auto b = run({"solve", path});
        if (a != b || a.first != 0) t.fail("solve output not reproducible");
    }

    // fuzz determinism
    ++t.checked;
    {
        auto a = run({"fuzz", "--count", "200", "--max-n", "18", "--seed", "7"});
        auto b = run({"fuzz", "--count", "200", "--max-n", "18", "--seed", "7"});
        if (a != b || a.first != 0) t.fail("fuzz output not reproducible");
    }

    // round trips on every generated family, both formats
    std::vector<Graph> graphs;
    for (int n = 3; n <= 15; ++n) {
        for (int k = 2; k < n; ++k) {
            graphs.push_back(gen_upper_extremal(n, k));
            graphs.push_back(gen_lower_extremal(n, k));
        }
    }
    graphs.push_back(gen_upper_extremal(2, 1));
    for (int m = 1; m <= 5; ++m) graphs.push_back(gen_circulant_example(m));
    for (int n = 3; n <= 12; ++n) {
        graphs.push_back(gen_basic(BasicFamily::Complete, n));
        graphs.push_back(gen_basic(BasicFamily::Cycle, n));
        graphs.push_back(gen_basic(BasicFamily::Path, n));
    }
    for (const auto& g : graphs) {
        for (auto format : {GraphFormat::EdgeList, GraphFormat::Dimacs}) {
            ++t.checked;
            Graph back = parse_graph(serialize_graph(g, format), format);
            if (back.num_vertices() != g.num_vertices() || back.edges() != g.edges()) {
                t.fail("round trip mismatch");
            }
        }
    }
    return t;
}

}  // namespace

int main() {
    auto corpus = sweep_corpus();
    int failures = 0;
    failures += !report(1, "bounds sandwich on the exhaustive + fuzzed corpus", corpus.sandwich);
    failures += !report(2, "refined bound and Refined certificates", corpus.refined);
    failures += !report(3, "sharpness of the upper bound on star chains", criterion3());
    failures += !report(4, "sharpness of the lower bound on clique chains", criterion4());
    failures += !report(5, "cycle and complete-graph equalities", criterion5());
    failures += !report(6, "small maximal independent sets in circulants", criterion6());
    failures += !report(7, "descent/ascent unit traces, bit-exact", criterion7());
    failures += !report(8, "degree-sum inequality on oracle witnesses", corpus.lemma);
    failures += !report(9, "aggregate bounds on disconnected fuzz corpus", criterion9());
    failures += !report(10, "determinism and I/O round trips", criterion10());
    return failures == 0 ? 0 : 1;
}
