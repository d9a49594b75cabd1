#include "alphabound/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace alphabound {

namespace {

// a >= 0, b >= 1
long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

void check_parameters(int n, int k) {
    if (k < 1 || k >= n) {
        throw std::invalid_argument("need 1 <= k < n");
    }
    if (k == 1 && n != 2) {
        throw std::invalid_argument("a connected graph with max degree 1 has exactly 2 vertices");
    }
}

}  // namespace

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

Rational Rational::operator+(const Rational& other) const {
    return Rational::of(num * other.den + other.num * den, den * other.den);
}

long long Rational::ceil() const {
    if (num >= 0) return ceil_div(num, den);
    return -((-num) / den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int lower_bound_connected(int n, int k) {
    check_parameters(n, k);
    return static_cast<int>(ceil_div(n - 1, k));
}

int refined_lower_bound(int n, int k) {
    check_parameters(n, k);
    if (k < 2) {
        throw std::invalid_argument("refined bound needs k >= 2");
    }
    return static_cast<int>(ceil_div(n, k));
}

int upper_bound_connected(int n, int k) {
    check_parameters(n, k);
    int value = n - static_cast<int>(ceil_div(n - 1, k));
    // identity from the bound's closed form
    if (value != static_cast<int>((static_cast<long long>(k - 1) * n + 1) / k)) {
        throw std::logic_error("upper bound identity violated");
    }
    return value;
}

Rational caro_wei_bound(const Graph& g) {
    Rational sum;
    for (int v = 1; v <= g.num_vertices(); ++v) {
        sum = sum + Rational::of(1, g.degree(v) + 1);
    }
    return sum;
}

DegreeSumCheck degree_sum_check(const Graph& g, const std::vector<int>& independent) {
    if (!is_independent_set(g, independent)) {
        throw std::invalid_argument("degree_sum_check requires an independent set");
    }
    std::vector<bool> in(static_cast<size_t>(g.num_vertices()) + 1, false);
    for (int v : independent) in[v] = true;
    DegreeSumCheck result;
    for (int v = 1; v <= g.num_vertices(); ++v) {
        if (!in[v]) result.sum += g.degree(v);
    }
    result.ok = result.sum >= g.num_edges();
    if (is_connected(g)) {
        result.ok = result.ok && result.sum >= g.num_vertices() - 1;
    }
    return result;
}

BoundsReport bounds_report(const Graph& g) {
    BoundsReport report;
    auto partition = components(g);
    report.singleton_count = partition.singleton_count;
    int sum_lower = 0;
    int sum_upper = 0;
    for (const auto& part : partition.parts) {
        ComponentBounds cb;
        cb.vertices = part;
        cb.n = static_cast<int>(part.size());
        if (cb.n == 1) {
            cb.max_degree = 0;
            cb.lower = cb.upper = 1;
        } else {
            auto sub = induced_subgraph(g, part);
            cb.max_degree = sub.graph.max_degree();
            cb.lower = lower_bound_connected(cb.n, cb.max_degree);
            cb.upper = upper_bound_connected(cb.n, cb.max_degree);
        }
        sum_lower += cb.lower;
        sum_upper += cb.upper;
        report.per_component.push_back(std::move(cb));
    }
    report.aggregate_lower = sum_lower;
    report.aggregate_upper = sum_upper;
    report.caro_wei = caro_wei_bound(g);
    report.caro_wei_ceiling = report.caro_wei.ceil();
    return report;
}

}  // namespace alphabound
