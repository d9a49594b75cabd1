#include "alphabound/augment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "alphabound/bounds.hpp"

namespace alphabound {

namespace {

// Walk from `start`, always moving to the lowest unvisited neighbor.
// Gives the canonical traversal order of a path or cycle.
std::vector<int> walk_order(const Graph& g, int start) {
    int n = g.num_vertices();
    std::vector<int> order{start};
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    used[start] = true;
    int cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = 0;
        for (int u : g.neighbors(cur)) {
            if (!used[u]) { next = u; break; }
        }
        if (next == 0) {
            throw std::logic_error("walk stalled before covering the graph");
        }
        order.push_back(next);
        used[next] = true;
        cur = next;
    }
    return order;
}

std::vector<int> alternating(const std::vector<int>& order, int count) {
    std::vector<int> set;
    for (int i = 0; i < count; ++i) {
        set.push_back(order[static_cast<size_t>(2 * i)]);
    }
    std::sort(set.begin(), set.end());
    return set;
}

Certificate finish(const Graph& g, Certificate cert) {
    std::sort(cert.set.begin(), cert.set.end());
    if (!is_independent_set(g, cert.set)) {
        throw std::logic_error("certificate set is not independent");
    }
    if (static_cast<int>(cert.set.size()) < cert.guarantee) {
        throw std::logic_error("certificate set smaller than its guarantee");
    }
    return cert;
}

}  // namespace

const char* to_string(Tier t) {
    return t == Tier::Baseline ? "Baseline" : "Refined";
}

const char* to_string(Branch b) {
    switch (b) {
        case Branch::PathOrCycle: return "PathOrCycle";
        case Branch::CompleteGraph: return "CompleteGraph";
        case Branch::NotDivisible: return "NotDivisible";
        case Branch::GreedySlack: return "GreedySlack";
        case Branch::FrontierPair: return "FrontierPair";
        case Branch::DescentCaseI: return "DescentCaseI";
        case Branch::DescentCaseII: return "DescentCaseII";
        case Branch::BaseNonComplete: return "BaseNonComplete";
        case Branch::ComponentUnion: return "ComponentUnion";
    }
    return "?";
}

DescentOutcome descend(const Graph& g, const GreedyTrace& trace) {
    int n = g.num_vertices();
    int k = g.max_degree();
    int m = trace.steps();
    if (k < 3) throw std::invalid_argument("descent needs max degree >= 3");
    if ((n - 1) % k != 0) throw std::invalid_argument("descent needs k to divide n-1");
    if (m != (n - 1) / k || m < 2) {
        throw std::invalid_argument("descent needs a tight trace with m = (n-1)/k >= 2");
    }
    for (int i = 2; i <= m; ++i) {
        if (static_cast<int>(trace.increments[static_cast<size_t>(i) - 1].size()) != k) {
            throw std::invalid_argument("descent needs every increment of size k");
        }
    }
    const auto& last = trace.increments.back();
    for (size_t a = 0; a < last.size(); ++a) {
        for (size_t b = a + 1; b < last.size(); ++b) {
            if (!g.adjacent(last[a], last[b])) {
                throw std::invalid_argument("descent needs the last increment to be a clique");
            }
        }
    }

    std::set<std::pair<int, int>> overlay;
    auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
    auto adj = [&](int u, int v) {
        return g.adjacent(u, v) || overlay.count(key(u, v)) > 0;
    };
    std::vector<bool> chosen(static_cast<size_t>(n) + 1, false);
    for (int v : trace.chosen) chosen[v] = true;

    DescentOutcome out;
    for (int i = m; i >= 2; --i) {
        const auto& below = trace.covered[static_cast<size_t>(i) - 2];     // V_{i-1}
        const auto& frontier = trace.increments[static_cast<size_t>(i) - 1];  // W_i

        LevelRecord rec;
        rec.level = i;
        rec.w = trace.chosen[static_cast<size_t>(i) - 1];
        for (int u : below) {
            if (adj(rec.w, u)) {
                if (rec.y != 0) throw std::logic_error("frontier vertex has two neighbors below");
                rec.y = u;
            }
        }
        if (rec.y == 0) throw std::logic_error("frontier vertex has no neighbor below");
        if (chosen[rec.y]) throw std::logic_error("y coincides with a chosen vertex");

        for (int u : frontier) {
            if (!adj(u, rec.y)) { rec.w_prime = u; break; }
        }
        if (rec.w_prime == 0) throw std::logic_error("every frontier vertex is adjacent to y");

        int yp = 0;
        for (int u : below) {
            if (adj(rec.w_prime, u)) {
                if (yp != 0) throw std::logic_error("w' has two neighbors below");
                yp = u;
            }
        }
        rec.y_prime = (yp != 0) ? yp : rec.y;
        if (yp != 0 && chosen[yp]) throw std::logic_error("y' coincides with a chosen vertex");
        if (rec.y_prime != rec.y && !adj(rec.y, rec.y_prime)) {
            overlay.insert(key(rec.y, rec.y_prime));
            rec.edge_added = true;
            out.added_edges.push_back(AddedEdge{std::min(rec.y, rec.y_prime),
                                                std::max(rec.y, rec.y_prime), i - 1});
        }
        out.levels.push_back(rec);

        // degree bound of the augmented graph on V_{i-1}
        for (int u : below) {
            int d = 0;
            for (int v : below) {
                if (v != u && adj(u, v)) ++d;
            }
            if (d > k) throw std::logic_error("working graph exceeds max degree");
        }

        // terminal check with r = i; W_1 is read as V_1
        const auto& level_down =
            (i == 2) ? trace.covered[0] : trace.increments[static_cast<size_t>(i) - 2];
        for (size_t a = 0; a < level_down.size(); ++a) {
            for (size_t b = a + 1; b < level_down.size(); ++b) {
                if (!adj(level_down[a], level_down[b])) {
                    out.case_one = true;
                    out.r = i;
                    out.x = level_down[a];
                    out.x_prime = level_down[b];
                    return out;
                }
            }
        }
        if (i == 2) {
            // level 1 is complete; the connectivity argument forces y != y'
            if (rec.y_prime == rec.y) {
                throw std::logic_error("complete base level with y = y'");
            }
            for (int u : frontier) {
                bool free = true;
                for (int v : below) {
                    if (adj(u, v)) { free = false; break; }
                }
                if (free) { out.w_double_prime = u; break; }
            }
            if (out.w_double_prime == 0) {
                throw std::logic_error("no frontier vertex free of the complete base level");
            }
            out.case_one = false;
            out.r = 2;
            return out;
        }
    }
    throw std::logic_error("descent ran past level 2");
}

std::vector<int> ascend(const Graph& g, const GreedyTrace& trace, const DescentOutcome& out) {
    int m = trace.steps();
    if (out.levels.empty() || out.levels.front().level != m) {
        throw std::invalid_argument("outcome does not match the trace");
    }
    auto rec = [&](int i) -> const LevelRecord& {
        const auto& r = out.levels.at(static_cast<size_t>(m - i));
        if (r.level != i) throw std::logic_error("level records out of order");
        return r;
    };
    // Adjacency in the working graph G_level': overlay edges only exist from
    // their first level downward.
    auto adj_at = [&](int u, int v, int level) {
        if (g.adjacent(u, v)) return true;
        for (const auto& e : out.added_edges) {
            if (e.first_level >= level &&
                ((e.u == u && e.v == v) || (e.u == v && e.v == u))) {
                return true;
            }
        }
        return false;
    };

    std::vector<int> set;
    auto add = [&](int v, int level) {
        for (int u : set) {
            if (adj_at(u, v, level)) {
                throw std::logic_error("ascent added a conflicting vertex");
            }
        }
        set.push_back(v);
    };

    int start;
    if (out.case_one) {
        int r0 = out.r;
        for (int j = 0; j < r0 - 2; ++j) add(trace.chosen[static_cast<size_t>(j)], r0 - 1);
        add(out.x, r0 - 1);
        add(out.x_prime, r0 - 1);
        const auto& lr = rec(r0);
        if (lr.y != lr.y_prime) {
            if (lr.y != out.x && lr.y != out.x_prime) {
                add(lr.w, r0);
            } else {
                if (lr.y_prime == out.x || lr.y_prime == out.x_prime) {
                    throw std::logic_error("both y and y' lie in the chosen pair");
                }
                add(lr.w_prime, r0);
            }
        } else {
            add(lr.w_prime, r0);
        }
        start = r0 + 1;
    } else {
        const auto& lr = rec(2);
        add(lr.y, 2);
        add(lr.y_prime, 2);
        add(out.w_double_prime, 2);
        start = 3;
    }
    for (int i = start; i <= m; ++i) {
        const auto& lr = rec(i);
        bool has_y = std::find(set.begin(), set.end(), lr.y) != set.end();
        add(has_y ? lr.w_prime : lr.w, i);
    }
    std::sort(set.begin(), set.end());
    if (static_cast<int>(set.size()) != m + 1) {
        throw std::logic_error("ascent did not reach size m+1");
    }
    if (!is_independent_set(g, set)) {
        throw std::logic_error("ascent produced a dependent set");
    }
    return set;
}

Certificate solve_connected(const Graph& g) {
    int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("solve_connected needs at least 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("solve_connected requires a connected graph");

    switch (classify(g)) {
        case GraphClass::Complete:
            return finish(g, Certificate{{1}, 1, Tier::Baseline, Branch::CompleteGraph});
        case GraphClass::Cycle: {
            int count = (n - 1 + 1) / 2;  // ceil((n-1)/2)
            return finish(g, Certificate{alternating(walk_order(g, 1), count), count,
                                         Tier::Baseline, Branch::PathOrCycle});
        }
        case GraphClass::Path: {
            int endpoint = 0;
            for (int v = 1; v <= n; ++v) {
                if (g.degree(v) == 1) { endpoint = v; break; }
            }
            int count = (n + 1) / 2;  // ceil(n/2)
            return finish(g, Certificate{alternating(walk_order(g, endpoint), count), count,
                                         Tier::Refined, Branch::PathOrCycle});
        }
        default:
            break;
    }

    int k = g.max_degree();  // >= 3 for connected non-complete non-cycle non-path
    auto trace = greedy_expand(g);
    int m = trace.steps();
    int refined = refined_lower_bound(n, k);

    if ((n - 1) % k != 0 || greedy_slack(trace, k)) {
        Branch branch = ((n - 1) % k != 0) ? Branch::NotDivisible : Branch::GreedySlack;
        return finish(g, Certificate{trace.chosen, refined, Tier::Refined, branch});
    }
    if (m == 1) {
        // n = k+1 and g is not complete
        int v = 0;
        for (int u = 1; u <= n && v == 0; ++u) {
            if (g.degree(u) < k) v = u;
        }
        int w = 0;
        for (int u = 1; u <= n && w == 0; ++u) {
            if (u != v && !g.adjacent(u, v)) w = u;
        }
        if (v == 0 || w == 0) throw std::logic_error("non-complete base case has no free pair");
        return finish(g, Certificate{{v, w}, 2, Tier::Refined, Branch::BaseNonComplete});
    }

    const auto& last = trace.increments.back();
    for (size_t a = 0; a < last.size(); ++a) {
        for (size_t b = a + 1; b < last.size(); ++b) {
            if (!g.adjacent(last[a], last[b])) {
                std::vector<int> set(trace.chosen.begin(), trace.chosen.end() - 1);
                set.push_back(last[a]);
                set.push_back(last[b]);
                return finish(g, Certificate{std::move(set), m + 1, Tier::Refined,
                                             Branch::FrontierPair});
            }
        }
    }

    auto outcome = descend(g, trace);
    auto set = ascend(g, trace, outcome);
    return finish(g, Certificate{std::move(set), m + 1, Tier::Refined,
                                 outcome.case_one ? Branch::DescentCaseI
                                                  : Branch::DescentCaseII});
}

Certificate solve_general(const Graph& g) {
    if (g.num_vertices() >= 2 && is_connected(g)) {
        return solve_connected(g);
    }
    Certificate cert;
    cert.branch = Branch::ComponentUnion;
    cert.tier = Tier::Refined;
    auto partition = components(g);
    for (const auto& part : partition.parts) {
        if (part.size() == 1) {
            cert.set.push_back(part.front());
            cert.guarantee += 1;
            continue;
        }
        auto sub = induced_subgraph(g, part);
        auto sub_cert = solve_connected(sub.graph);
        auto lifted = sub.lift(sub_cert.set);
        cert.set.insert(cert.set.end(), lifted.begin(), lifted.end());
        cert.guarantee += sub_cert.guarantee;
        if (sub_cert.tier == Tier::Baseline) cert.tier = Tier::Baseline;
    }
    return finish(g, cert);
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
    for (int v : cert.set) {
        if (v < 1 || v > g.num_vertices()) return false;
    }
    return is_independent_set(g, cert.set) &&
           static_cast<int>(cert.set.size()) >= cert.guarantee;
}

}  // namespace alphabound
