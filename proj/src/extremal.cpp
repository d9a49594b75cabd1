#include "alphabound/extremal.hpp"

#include <stdexcept>

namespace alphabound {

Graph gen_upper_extremal(int n, int k) {
    if (k < 1 || k >= n) {
        throw std::invalid_argument("need 1 <= k < n");
    }
    if (k == 1 && n != 2) {
        throw std::invalid_argument("k = 1 requires n = 2");
    }
    int j = (n - 2) / k + 1;  // ceil((n-1)/k)
    int r = k * j - (n - 1);
    int m = n - j;
    if (r < 0 || r > k - 1 || m != 1 + j * (k - 1) - r) {
        throw std::logic_error("star-chain parameter identities violated");
    }
    std::vector<std::pair<int, int>> edges;
    for (int p = 1; p <= j; ++p) {
        int span = (p == j) ? k - 1 - r : k - 1;
        for (int i = 0; i <= span; ++i) {
            edges.emplace_back(1 + (p - 1) * (k - 1) + i, m + p);
        }
    }
    return Graph(n, edges);
}

Graph gen_lower_extremal(int n, int k) {
    if (k < 2) {
        throw std::invalid_argument("clique chain needs k >= 2");
    }
    if (k >= n) {
        throw std::invalid_argument("need k < n");
    }
    int j = (n + k - 1) / k;  // ceil(n/k)
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= j; ++i) {
        int lo = (i - 1) * k + 1;
        int hi = (i == j) ? n : i * k;
        for (int a = lo; a <= hi; ++a) {
            for (int b = a + 1; b <= hi; ++b) {
                edges.emplace_back(a, b);
            }
        }
        if (i < j) {
            edges.emplace_back(i * k, i * k + 1);  // bridge to the next clique
        }
    }
    return Graph(n, edges);
}

Graph gen_circulant_example(int m) {
    if (m < 1) {
        throw std::invalid_argument("need m >= 1");
    }
    int n = 4 * m + 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int d = 1; d <= m; ++d) {
            int t = (i + d) % n;
            if (t == 0) t = n;  // keep identifiers in [n]
            edges.emplace_back(i, t);
        }
    }
    return Graph(n, edges);
}

Graph gen_basic(BasicFamily family, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case BasicFamily::Complete:
            if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            for (int a = 1; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    edges.emplace_back(a, b);
                }
            }
            break;
        case BasicFamily::Cycle:
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
            edges.emplace_back(n, 1);
            break;
        case BasicFamily::Path:
            if (n < 2) throw std::invalid_argument("path needs n >= 2");
            for (int a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
            break;
    }
    return Graph(n, edges);
}

}  // namespace alphabound
