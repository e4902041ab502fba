#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jpm/families.hpp"

namespace jpm {

/// k-uniform hypergraph on k disjoint copies of Z/p. Every edge takes exactly
/// one vertex from each copy, so it is stored as the k field elements
/// (element of copy 1, ..., element of copy k).
struct BSimpleHypergraph {
    std::uint32_t p = 0;
    int k = 0;
    int b = 0;
    std::vector<std::vector<std::uint32_t>> edges;

    std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(p) * static_cast<std::size_t>(k); }
    /// Number of vertices shared by two edges.
    int shared(std::size_t e, std::size_t f) const noexcept;
};

inline constexpr std::uint32_t kMaxFieldPrime = 1U << 20;

bool is_prime(std::uint64_t value) noexcept;

/// Edges are all solutions of sum_i i^j x_i = 0 (mod p), j = 0..k-b-2,
/// over copies i = 1..k. Requires p prime, p >= k and 1 <= b <= k-1; for
/// b = k-1 there are no equations and the result is complete k-partite.
BSimpleHypergraph rs_construct(std::uint32_t p, int k, int b);

struct SimplicityCheck {
    std::optional<std::pair<std::size_t, std::size_t>> violation;
    bool ok() const noexcept { return !violation.has_value(); }
};

/// Exhaustive check that every two edges share at most h.b vertices.
SimplicityCheck verify_b_simple(const BSimpleHypergraph& h);

/// Range of the number of edges through an r-set of vertices taken from r
/// distinct copies, over all such r-sets.
struct CodegreeRange {
    std::size_t min = 0;
    std::size_t max = 0;
};
CodegreeRange codegree_range(const BSimpleHypergraph& h, int r);

struct PrimeChoice {
    std::uint32_t p = 0;
    /// Whether p - 1 > 2^k.
    bool exceeds_power_of_two = false;
};

/// Largest prime p with n/(2k) <= p <= n/k. Requires n > 4k.
PrimeChoice choose_prime(int n, int k);

/// Relabels hypergraph vertices onto places. place_map[(i-1)*p + x] is the
/// place of element x in copy i; the map must be injective into 1..n.
std::vector<PlaceSet> embed_hypergraph_supports(const BSimpleHypergraph& h,
                                                std::span<const int> place_map, int n);

/// The seven lines of the Fano plane on the given seven places.
std::vector<PlaceSet> fano_supports(std::span<const int> places);

}  // namespace jpm
