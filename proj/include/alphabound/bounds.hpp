#ifndef alphabound_bounds_hpp
#define alphabound_bounds_hpp

#include <string>
#include <vector>

#include "alphabound/graph.hpp"

namespace alphabound {

// Exact rational, always reduced with positive denominator. Sufficient for
// degree-based sums on desk-scale graphs; no arbitrary precision.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    Rational operator+(const Rational& other) const;
    bool operator==(const Rational& other) const = default;
    long long ceil() const;
    std::string str() const;  // "p/q", or just "p" when q == 1
};

// ceil((n-1)/k) for a connected graph on n vertices with max degree k.
int lower_bound_connected(int n, int k);

// ceil(n/k) for connected graphs that are neither complete nor cycles (k >= 2).
int refined_lower_bound(int n, int k);

// n - ceil((n-1)/k); also equals floor(((k-1)n + 1)/k), which is asserted.
int upper_bound_connected(int n, int k);

// Sum over all vertices of 1/(deg(v)+1).
Rational caro_wei_bound(const Graph& g);

struct DegreeSumCheck {
    long long sum = 0;  // sum of degrees over V(G) \ I
    bool ok = false;    // sum >= |E|, and >= n-1 when G is connected
};

// I must be independent (error otherwise).
DegreeSumCheck degree_sum_check(const Graph& g, const std::vector<int>& independent);

struct ComponentBounds {
    std::vector<int> vertices;
    int n = 0;
    int max_degree = 0;
    int lower = 0;
    int upper = 0;
};

struct BoundsReport {
    std::vector<ComponentBounds> per_component;  // every component, singletons included
    int singleton_count = 0;
    int aggregate_lower = 0;
    int aggregate_upper = 0;
    Rational caro_wei;
    long long caro_wei_ceiling = 0;
};

// Works on any graph; the bounds are applied per non-singleton component
// and singletons contribute 1 to both aggregates.
BoundsReport bounds_report(const Graph& g);

}  // namespace alphabound

#endif
