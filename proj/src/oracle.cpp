#include "alphabound/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace alphabound {

namespace {

inline uint64_t bit(int v) { return uint64_t{1} << v; }

// Branch-and-bound maximum independent set on a component of at most 63
// vertices, indexed 0-based into bit masks.
struct MaskSearch {
    std::vector<uint64_t> open;    // open[v] = neighbor mask
    std::vector<uint64_t> closed;  // open[v] | bit(v)
    uint64_t best_mask = 0;
    int best_size = 0;

    // Sum of degree-based upper bounds over the components induced by P.
    int upper_bound(uint64_t P) const {
        int total = 0;
        uint64_t rem = P;
        while (rem != 0) {
            uint64_t comp = rem & (~rem + 1);
            uint64_t frontier = comp;
            while (frontier != 0) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                uint64_t fresh = open[static_cast<size_t>(v)] & P & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rem &= ~comp;
            int sz = std::popcount(comp);
            int maxdeg = 0;
            uint64_t c = comp;
            while (c != 0) {
                int v = std::countr_zero(c);
                c &= c - 1;
                maxdeg = std::max(maxdeg, std::popcount(open[static_cast<size_t>(v)] & comp));
            }
            if (maxdeg == 0) {
                total += sz;
            } else {
                total += sz - ((sz - 2) / maxdeg + 1);  // sz - ceil((sz-1)/maxdeg)
            }
        }
        return total;
    }

    void search(uint64_t P, uint64_t cur, int cur_size) {
        if (P == 0) {
            if (cur_size > best_size) {
                best_size = cur_size;
                best_mask = cur;
            }
            return;
        }
        if (cur_size + upper_bound(P) <= best_size) return;
        int pick = -1;
        int pick_deg = -1;
        uint64_t t = P;
        while (t != 0) {
            int v = std::countr_zero(t);
            t &= t - 1;
            int d = std::popcount(open[static_cast<size_t>(v)] & P);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick_deg == 0) {
            if (cur_size + std::popcount(P) > best_size) {
                best_size = cur_size + std::popcount(P);
                best_mask = cur | P;
            }
            return;
        }
        search(P & ~closed[static_cast<size_t>(pick)], cur | bit(pick), cur_size + 1);
        search(P & ~bit(pick), cur, cur_size);
    }

    // Min-degree greedy seed for the initial incumbent.
    void seed(uint64_t all) {
        uint64_t P = all;
        uint64_t cur = 0;
        int size = 0;
        while (P != 0) {
            int pick = -1;
            int pick_deg = 1 << 30;
            uint64_t t = P;
            while (t != 0) {
                int v = std::countr_zero(t);
                t &= t - 1;
                int d = std::popcount(open[static_cast<size_t>(v)] & P);
                if (d < pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            cur |= bit(pick);
            ++size;
            P &= ~closed[static_cast<size_t>(pick)];
        }
        best_mask = cur;
        best_size = size;
    }
};

}  // namespace

OracleResult alpha_exact(const Graph& g, int limit) {
    if (limit < 1 || limit > 63) {
        throw std::invalid_argument("oracle limit must be between 1 and 63");
    }
    if (g.num_vertices() > limit) {
        throw std::invalid_argument("graph has " + std::to_string(g.num_vertices()) +
                                    " vertices, above the oracle limit of " +
                                    std::to_string(limit));
    }
    OracleResult result;
    for (const auto& part : components(g).parts) {
        if (part.size() == 1) {
            result.alpha += 1;
            result.witness.push_back(part.front());
            continue;
        }
        auto sub = induced_subgraph(g, part);
        int nc = sub.graph.num_vertices();
        MaskSearch search;
        search.open.assign(static_cast<size_t>(nc), 0);
        search.closed.assign(static_cast<size_t>(nc), 0);
        for (int v = 1; v <= nc; ++v) {
            for (int u : sub.graph.neighbors(v)) {
                search.open[static_cast<size_t>(v) - 1] |= bit(u - 1);
            }
            search.closed[static_cast<size_t>(v) - 1] =
                search.open[static_cast<size_t>(v) - 1] | bit(v - 1);
        }
        uint64_t all = (nc == 63) ? ~uint64_t{0} >> 1 : bit(nc) - 1;
        search.seed(all);
        search.search(all, 0, 0);
        result.alpha += search.best_size;
        std::vector<int> local;
        uint64_t w = search.best_mask;
        while (w != 0) {
            int v = std::countr_zero(w);
            w &= w - 1;
            local.push_back(v + 1);
        }
        auto lifted = sub.lift(local);
        result.witness.insert(result.witness.end(), lifted.begin(), lifted.end());
    }
    std::sort(result.witness.begin(), result.witness.end());
    if (!is_independent_set(g, result.witness) ||
        static_cast<int>(result.witness.size()) != result.alpha) {
        throw std::logic_error("oracle witness inconsistent");
    }
    return result;
}

bool is_maximal_independent(const Graph& g, const std::vector<int>& s) {
    if (!is_independent_set(g, s)) return false;
    std::vector<bool> in(static_cast<size_t>(g.num_vertices()) + 1, false);
    for (int v : s) in[v] = true;
    for (int v = 1; v <= g.num_vertices(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (int u : g.neighbors(v)) {
            if (in[u]) { dominated = true; break; }
        }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace alphabound
