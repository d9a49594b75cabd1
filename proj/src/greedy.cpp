#include "alphabound/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphabound {

GreedyTrace greedy_expand(const Graph& g) {
    int n = g.num_vertices();
    if (n < 2) {
        throw std::invalid_argument("greedy expansion needs at least 2 vertices");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("greedy expansion requires a connected graph");
    }
    int k = g.max_degree();

    GreedyTrace trace;
    std::vector<bool> covered(static_cast<size_t>(n) + 1, false);
    std::vector<bool> chosen(static_cast<size_t>(n) + 1, false);
    int covered_count = 0;

    auto cover = [&](int v) {
        std::vector<int> fresh{v};
        covered[v] = true;
        for (int u : g.neighbors(v)) {
            if (!covered[u]) {
                covered[u] = true;
                fresh.push_back(u);
            }
        }
        covered_count += static_cast<int>(fresh.size());
        std::sort(fresh.begin(), fresh.end());
        return fresh;
    };

    int v1 = 0;
    for (int v = 1; v <= n; ++v) {
        if (g.degree(v) == k) { v1 = v; break; }
    }
    trace.chosen.push_back(v1);
    chosen[v1] = true;
    trace.increments.push_back(cover(v1));
    trace.covered.push_back(trace.increments.back());

    while (covered_count < n) {
        int next = 0;
        int witness = 0;
        for (int v = 1; v <= n && next == 0; ++v) {
            if (covered[v]) continue;
            for (int u : g.neighbors(v)) {
                if (covered[u]) {
                    next = v;
                    witness = u;  // neighbor lists are sorted, so this is the lowest
                    break;
                }
            }
        }
        if (next == 0) {
            throw std::logic_error("no frontier vertex found on a connected graph");
        }
        for (int u : g.neighbors(next)) {
            if (chosen[u]) {
                throw std::logic_error("frontier vertex adjacent to a chosen vertex");
            }
        }
        trace.chosen.push_back(next);
        chosen[next] = true;
        trace.witnesses.push_back(witness);
        trace.increments.push_back(cover(next));
        std::vector<int> cumulative = trace.covered.back();
        cumulative.insert(cumulative.end(), trace.increments.back().begin(),
                          trace.increments.back().end());
        std::sort(cumulative.begin(), cumulative.end());
        trace.covered.push_back(std::move(cumulative));
    }

    if (trace.steps() < (n - 2) / k + 1) {
        throw std::logic_error("greedy produced fewer than ceil((n-1)/k) vertices");
    }
    return trace;
}

bool greedy_slack(const GreedyTrace& trace, int k) {
    for (size_t i = 1; i < trace.increments.size(); ++i) {
        if (static_cast<int>(trace.increments[i].size()) < k) return true;
    }
    return false;
}

}  // namespace alphabound
