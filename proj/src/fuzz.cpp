#include "alphabound/fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "alphabound/augment.hpp"
#include "alphabound/bounds.hpp"
#include "alphabound/oracle.hpp"

namespace alphabound {

Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_probability) {
    if (n < 2) throw std::invalid_argument("connected fuzz graphs need n >= 2");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.emplace_back(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(pick(rng))]);
    }
    std::bernoulli_distribution extra(extra_edge_probability);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (extra(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_probability) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::bernoulli_distribution coin(edge_probability);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

std::string validate_instance(const Graph& g) {
    auto cert = solve_general(g);
    if (!verify_certificate(g, cert)) {
        return "certificate failed verification";
    }
    auto report = bounds_report(g);
    auto exact = alpha_exact(g);
    if (exact.alpha < report.aggregate_lower || exact.alpha > report.aggregate_upper) {
        return "alpha outside the aggregate bounds";
    }
    if (static_cast<int>(cert.set.size()) > exact.alpha) {
        return "certificate larger than alpha";
    }
    if (cert.guarantee > exact.alpha) {
        return "guarantee exceeds alpha";
    }
    if (report.caro_wei_ceiling > exact.alpha) {
        return "Caro-Wei ceiling exceeds alpha";
    }
    if (!degree_sum_check(g, exact.witness).ok) {
        return "degree-sum inequality failed on the oracle witness";
    }
    if (!is_maximal_independent(g, exact.witness)) {
        return "oracle witness is not maximal";
    }
    if (g.num_vertices() >= 2 && is_connected(g)) {
        auto cls = classify(g);
        if (cls != GraphClass::Complete && cls != GraphClass::Cycle) {
            int refined = refined_lower_bound(g.num_vertices(), g.max_degree());
            if (exact.alpha < refined) return "alpha below the refined lower bound";
            if (cert.tier != Tier::Refined) return "connected non-complete non-cycle certificate not Refined";
            if (cert.guarantee != refined) return "guarantee differs from the refined bound";
        }
    }
    return {};
}

}  // namespace alphabound
