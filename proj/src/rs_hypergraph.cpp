#include "jpm/rs_hypergraph.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "jpm/error.hpp"

namespace jpm {

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1U) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return power_mod(a, p - 2, p); }

// Gauss-Jordan inverse of a square matrix over Z/p; p prime.
Matrix invert_mod(Matrix a, std::uint64_t p) {
    const std::size_t m = a.size();
    Matrix inv(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) throw Error(ErrorCode::InvalidParams, "singular Vandermonde block");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const std::uint64_t scale = inverse_mod(a[col][col], p);
        for (std::size_t j = 0; j < m; ++j) {
            a[col][j] = a[col][j] * scale % p;
            inv[col][j] = inv[col][j] * scale % p;
        }
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const std::uint64_t factor = a[row][col];
            for (std::size_t j = 0; j < m; ++j) {
                a[row][j] = (a[row][j] + (p - factor) * a[col][j]) % p;
                inv[row][j] = (inv[row][j] + (p - factor) * inv[col][j]) % p;
            }
        }
    }
    return inv;
}

// Visits every r-subset of {0..k-1} as an ascending index list.
template <typename Fn>
void for_each_subset(int k, int r, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(std::span<const int>(idx));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - r + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

int BSimpleHypergraph::shared(std::size_t e, std::size_t f) const noexcept {
    int count = 0;
    for (std::size_t i = 0; i < edges[e].size(); ++i) count += edges[e][i] == edges[f][i];
    return count;
}

bool is_prime(std::uint64_t value) noexcept {
    if (value < 2) return false;
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) return false;
    }
    return true;
}

BSimpleHypergraph rs_construct(std::uint32_t p, int k, int b) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p > kMaxFieldPrime) throw Error(ErrorCode::InvalidParams, "p exceeds 2^20");
    // Evaluation points 1..k must be distinct mod p; k = p maps point p to 0.
    if (k < 2 || static_cast<std::uint32_t>(k) > p) {
        throw Error(ErrorCode::PTooSmall, "need p >= k >= 2, got p=" + std::to_string(p) +
                                              " k=" + std::to_string(k));
    }
    if (b < 1 || b > k - 1) {
        throw Error(ErrorCode::InvalidParams, "b must lie in 1..k-1, got " + std::to_string(b));
    }
    const int free_count = b + 1;
    const int equations = k - b - 1;
    std::uint64_t edge_count = 1;
    for (int i = 0; i < free_count; ++i) {
        edge_count *= p;
        if (edge_count > (std::uint64_t{1} << 26)) {
            throw Error(ErrorCode::TooLarge, "p^(b+1) edges exceed 2^26");
        }
    }

    // Copies 1..b+1 are free; copies b+2..k are solved for. With A the
    // Vandermonde block on the solved copies and B the block on the free
    // ones, the solved coordinates are -A^{-1} B x_free.
    const auto mod = static_cast<std::uint64_t>(p);
    Matrix solve(static_cast<std::size_t>(equations), std::vector<std::uint64_t>(static_cast<std::size_t>(free_count), 0));
    if (equations > 0) {
        Matrix a(static_cast<std::size_t>(equations), std::vector<std::uint64_t>(static_cast<std::size_t>(equations)));
        Matrix bm(static_cast<std::size_t>(equations), std::vector<std::uint64_t>(static_cast<std::size_t>(free_count)));
        for (int j = 0; j < equations; ++j) {
            for (int c = 0; c < equations; ++c) {
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = power_mod(static_cast<std::uint64_t>(free_count + 1 + c), static_cast<std::uint64_t>(j), mod);
            }
            for (int c = 0; c < free_count; ++c) {
                bm[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = power_mod(static_cast<std::uint64_t>(c + 1), static_cast<std::uint64_t>(j), mod);
            }
        }
        const Matrix inv = invert_mod(std::move(a), mod);
        for (int r = 0; r < equations; ++r) {
            for (int c = 0; c < free_count; ++c) {
                std::uint64_t acc = 0;
                for (int m = 0; m < equations; ++m) {
                    acc = (acc + inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] * bm[static_cast<std::size_t>(m)][static_cast<std::size_t>(c)]) % mod;
                }
                solve[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (mod - acc) % mod;
            }
        }
    }

    BSimpleHypergraph h{p, k, b, {}};
    h.edges.reserve(static_cast<std::size_t>(edge_count));
    std::vector<std::uint32_t> free_values(static_cast<std::size_t>(free_count), 0);
    for (std::uint64_t e = 0; e < edge_count; ++e) {
        std::uint64_t rest = e;
        for (int c = free_count - 1; c >= 0; --c) {
            free_values[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(rest % mod);
            rest /= mod;
        }
        std::vector<std::uint32_t> edge(free_values);
        for (int r = 0; r < equations; ++r) {
            std::uint64_t acc = 0;
            for (int c = 0; c < free_count; ++c) {
                acc = (acc + solve[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * free_values[static_cast<std::size_t>(c)]) % mod;
            }
            edge.push_back(static_cast<std::uint32_t>(acc));
        }
        h.edges.push_back(std::move(edge));
    }
    return h;
}

SimplicityCheck verify_b_simple(const BSimpleHypergraph& h) {
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        for (std::size_t f = e + 1; f < h.edges.size(); ++f) {
            if (h.shared(e, f) > h.b) return {std::make_pair(e, f)};
        }
    }
    return {};
}

CodegreeRange codegree_range(const BSimpleHypergraph& h, int r) {
    if (r < 1 || r > h.k) throw Error(ErrorCode::InvalidParams, "codegree order must lie in 1..k");
    std::uint64_t cells = 1;
    for (int i = 0; i < r; ++i) {
        cells *= h.p;
        if (cells > (std::uint64_t{1} << 28)) throw Error(ErrorCode::TooLarge, "p^r codegree table too large");
    }
    CodegreeRange range{static_cast<std::size_t>(-1), 0};
    std::vector<std::size_t> counts(static_cast<std::size_t>(cells));
    for_each_subset(h.k, r, [&](std::span<const int> copies) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& edge : h.edges) {
            std::uint64_t key = 0;
            for (int c : copies) key = key * h.p + edge[static_cast<std::size_t>(c)];
            ++counts[static_cast<std::size_t>(key)];
        }
        for (auto c : counts) {
            range.min = std::min(range.min, c);
            range.max = std::max(range.max, c);
        }
    });
    return range;
}

PrimeChoice choose_prime(int n, int k) {
    if (k < 1 || n <= 4 * k) {
        throw Error(ErrorCode::InvalidParams, "choose_prime needs n > 4k, got n=" + std::to_string(n) +
                                                  " k=" + std::to_string(k));
    }
    for (int p = n / k; p >= 2; --p) {
        if (2 * k * p < n) break;
        if (is_prime(static_cast<std::uint64_t>(p))) {
            const bool exceeds = k < 63 && static_cast<std::uint64_t>(p - 1) > (std::uint64_t{1} << k);
            return {static_cast<std::uint32_t>(p), exceeds};
        }
    }
    throw Error(ErrorCode::NoPrimeInWindow, "no prime in [n/2k, n/k] for n=" + std::to_string(n) +
                                                " k=" + std::to_string(k));
}

std::vector<PlaceSet> embed_hypergraph_supports(const BSimpleHypergraph& h,
                                                std::span<const int> place_map, int n) {
    if (place_map.size() != h.vertex_count()) {
        throw Error(ErrorCode::InvalidParams, "place map must cover all p*k hypergraph vertices");
    }
    if (n < 1 || n > kMaxDimension) throw Error(ErrorCode::BadPlaces, "n must lie in 1..64");
    std::unordered_set<int> seen;
    for (int place : place_map) {
        if (place < 1 || place > n) {
            throw Error(ErrorCode::BadPlaces, "place " + std::to_string(place) + " outside 1.." + std::to_string(n));
        }
        if (!seen.insert(place).second) {
            throw Error(ErrorCode::MapNotInjective, "place " + std::to_string(place) + " used twice");
        }
    }
    std::vector<PlaceSet> supports;
    supports.reserve(h.edges.size());
    for (const auto& edge : h.edges) {
        PlaceSet s = 0;
        for (std::size_t i = 0; i < edge.size(); ++i) {
            const int place = place_map[i * h.p + edge[i]];
            s |= PlaceSet{1} << (place - 1);
        }
        supports.push_back(s);
    }
    return supports;
}

std::vector<PlaceSet> fano_supports(std::span<const int> places) {
    if (places.size() != 7) throw Error(ErrorCode::BadPlaces, "Fano plane needs exactly 7 places");
    const PlaceSet all = make_place_set(places);
    if (std::popcount(all) != 7) throw Error(ErrorCode::BadPlaces, "Fano places must be distinct");
    static constexpr std::array<std::array<int, 3>, 7> lines{{
        {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5},
    }};
    std::vector<PlaceSet> out;
    for (const auto& line : lines) {
        out.push_back(make_place_set({places[static_cast<std::size_t>(line[0])],
                                      places[static_cast<std::size_t>(line[1])],
                                      places[static_cast<std::size_t>(line[2])]}));
    }
    return out;
}

}  // namespace jpm
