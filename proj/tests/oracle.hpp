// Independent reference implementations for tests: plain integer vectors
// and a bitmask maximum independent set, sharing no code with the library.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

// All vectors in {-1,0,1}^n with exactly `plus` ones and `minus` minus-ones.
inline std::vector<Vec> signed_vectors(int n, int plus, int minus) {
    std::vector<Vec> out;
    Vec v(n, 0);
    std::function<void(int, int, int)> rec = [&](int i, int p, int m) {
        if (i == n) {
            if (p == 0 && m == 0) out.push_back(v);
            return;
        }
        if (n - i < p + m) return;
        v[i] = 0;
        rec(i + 1, p, m);
        if (p > 0) {
            v[i] = 1;
            rec(i + 1, p - 1, m);
        }
        if (m > 0) {
            v[i] = -1;
            rec(i + 1, p, m - 1);
        }
        v[i] = 0;
    };
    rec(0, plus, minus);
    return out;
}

// Every vector of weight k, any signs.
inline std::vector<Vec> weight_k(int n, int k) {
    std::vector<Vec> out;
    for (int m = 0; m <= k; ++m) {
        auto part = signed_vectors(n, k - m, m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline int dot(const Vec& a, const Vec& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Maximum independent set on at most 64 vertices; adj[v] is a neighbour mask.
inline int mis(const std::vector<std::uint64_t>& adj, std::uint64_t remaining) {
    if (remaining == 0) return 0;
    int best_v = -1;
    int best_deg = 1 << 30;
    for (std::uint64_t r = remaining; r != 0; r &= r - 1) {
        const int v = std::countr_zero(r);
        const int deg = std::popcount(adj[v] & remaining);
        if (deg < best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    const std::uint64_t bit = std::uint64_t{1} << best_v;
    const int take = 1 + mis(adj, remaining & ~bit & ~adj[best_v]);
    if (best_deg <= 1) return take;
    // Some maximum set avoids N[v] entirely or contains a neighbour of v.
    int best = take;
    for (std::uint64_t r = adj[best_v] & remaining; r != 0; r &= r - 1) {
        const int u = std::countr_zero(r);
        const std::uint64_t ubit = std::uint64_t{1} << u;
        best = std::max(best, 1 + mis(adj, remaining & ~ubit & ~adj[u] & ~(adj[best_v] & ((ubit << 1) - 1) & ~ubit)));
    }
    return best;
}

inline int mis(const std::vector<std::uint64_t>& adj) {
    const std::size_t n = adj.size();
    return mis(adj, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace oracle
