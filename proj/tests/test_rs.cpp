#include <doctest.h>

#include <map>
#include <set>

#include "jpm/error.hpp"
#include "jpm/families.hpp"
#include "jpm/rs_hypergraph.hpp"
#include "jpm/solver.hpp"

using namespace jpm;

namespace {

using Tuple = std::vector<std::uint32_t>;

// All tuples in Z_p^k with sum_i i^j x_i = 0 for j = 0..k-b-2, by enumeration.
std::set<Tuple> solutions(std::uint32_t p, int k, int b) {
    std::set<Tuple> out;
    Tuple x(k, 0);
    while (true) {
        bool ok = true;
        for (int j = 0; j <= k - b - 2 && ok; ++j) {
            std::uint64_t sum = 0;
            for (int i = 1; i <= k; ++i) {
                std::uint64_t power = 1;
                for (int e = 0; e < j; ++e) power = power * i % p;
                sum = (sum + power * x[i - 1]) % p;
            }
            ok = sum == 0;
        }
        if (ok) out.insert(x);
        int pos = 0;
        while (pos < k && ++x[pos] == p) x[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

std::uint64_t power(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("Reed-Solomon hypergraph invariants") {
    for (std::uint32_t p : {5U, 7U, 11U}) {
        for (int k : {3, 4, 5}) {
            for (int b = 1; b <= k - 2; ++b) {
                CAPTURE(p);
                CAPTURE(k);
                CAPTURE(b);
                const BSimpleHypergraph h = rs_construct(p, k, b);
                CHECK(h.vertex_count() == p * static_cast<std::size_t>(k));
                CHECK(h.edges.size() == power(p, b + 1));
                const std::set<Tuple> edge_set(h.edges.begin(), h.edges.end());
                CHECK(edge_set.size() == h.edges.size());
                CHECK(edge_set == solutions(p, k, b));
                CHECK(verify_b_simple(h).ok());
                const auto cod = codegree_range(h, b);
                CHECK(cod.min == p);
                CHECK(cod.max == p);
                const auto deg = codegree_range(h, 1);
                CHECK(deg.min == power(p, b));
                CHECK(deg.max == power(p, b));
            }
        }
    }
}

TEST_CASE("pairwise intersections and codegree by direct count") {
    const BSimpleHypergraph h = rs_construct(7, 3, 1);
    CHECK(h.edges.size() == 49);
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (std::size_t f = e + 1; f < h.edges.size(); ++f) CHECK(h.shared(e, f) <= 1);

    const BSimpleHypergraph h2 = rs_construct(5, 4, 2);
    std::map<std::tuple<int, std::uint32_t, int, std::uint32_t>, int> pairs;
    for (const auto& e : h2.edges)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) ++pairs[{i, e[i], j, e[j]}];
    CHECK(pairs.size() == 6 * 25);
    for (const auto& [key, count] : pairs) CHECK(count == 5);
}

TEST_CASE("fixing b+1 coordinates determines the edge") {
    for (int k : {3, 4, 5}) {
        for (int b = 1; b <= k - 2; ++b) {
            const BSimpleHypergraph h = rs_construct(5, k, b);
            // Every choice of b+1 copies: projections are a bijection onto Z_5^{b+1}.
            std::vector<int> copies(b + 1);
            for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
                if (std::popcount(mask) != b + 1) continue;
                std::set<Tuple> seen;
                for (const auto& e : h.edges) {
                    Tuple proj;
                    for (int i = 0; i < k; ++i)
                        if (mask >> i & 1) proj.push_back(e[i]);
                    seen.insert(proj);
                }
                CHECK(seen.size() == h.edges.size());
            }
        }
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(rs_construct(6, 3, 1), Error);
    CHECK_THROWS_AS(rs_construct(3, 4, 1), Error);
    CHECK_THROWS_AS(rs_construct(5, 3, 0), Error);
    try {
        rs_construct(9, 3, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    CHECK(rs_construct(5, 5, 1).edges.size() == 25);
    try {
        rs_construct(3, 4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PTooSmall);
    }
    // b = k-1 leaves no equations: the complete k-partite hypergraph.
    CHECK(rs_construct(5, 3, 2).edges.size() == 125);
}

TEST_CASE("hand-built hypergraphs") {
    BSimpleHypergraph h{5, 3, 1, {{0, 0, 0}, {0, 0, 1}}};
    const auto check = verify_b_simple(h);
    REQUIRE_FALSE(check.ok());
    CHECK(check.violation->first == 0);
    CHECK(check.violation->second == 1);
    BSimpleHypergraph single{5, 3, 1, {{1, 2, 3}}};
    CHECK(verify_b_simple(single).ok());
}

TEST_CASE("prime choice") {
    CHECK(choose_prime(50, 3).p == 13);
    CHECK(choose_prime(30, 2).p == 13);
    CHECK(choose_prime(9, 2).p == 3);
    CHECK(choose_prime(100, 3).exceeds_power_of_two);
    CHECK_FALSE(choose_prime(9, 2).exceeds_power_of_two);
    CHECK_THROWS_AS(choose_prime(12, 3), Error);
}

TEST_CASE("embedding into places") {
    const BSimpleHypergraph h = rs_construct(5, 3, 1);
    std::vector<int> identity(15);
    for (int i = 0; i < 15; ++i) identity[i] = i + 1;
    const auto supports = embed_hypergraph_supports(h, identity, 15);
    CHECK(supports.size() == 25);

    std::vector<int> shuffled = identity;
    std::reverse(shuffled.begin(), shuffled.end());
    std::swap(shuffled[0], shuffled[7]);
    const auto moved = embed_hypergraph_supports(h, shuffled, 15);
    auto spectrum = [](const std::vector<PlaceSet>& s) {
        std::multiset<int> out;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) out.insert(std::popcount(s[a] & s[b]));
        return out;
    };
    CHECK(spectrum(supports) == spectrum(moved));

    const DistanceGraph g = build_graph(GraphSpec::jpm(15, 3, -1));
    CHECK(induced_on_supports(g, supports).order() == 200);

    std::vector<int> clash = identity;
    clash[1] = 1;
    CHECK_THROWS_AS(embed_hypergraph_supports(h, clash, 15), Error);
    std::vector<int> outside = identity;
    outside[0] = 16;
    CHECK_THROWS_AS(embed_hypergraph_supports(h, outside, 15), Error);
}

TEST_CASE("Fano subgraph has alpha 7") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(7, 3, -1));
    const std::vector<int> places{1, 2, 3, 4, 5, 6, 7};
    const auto h = induced_on_supports(g, fano_supports(places));
    CHECK(solve_exact(h).alpha == 7);
    const std::vector<int> repeated{1, 2, 3, 4, 5, 6, 6};
    CHECK_THROWS_AS(fano_supports(repeated), Error);
}
