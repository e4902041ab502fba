#include <doctest.h>

#include <random>

#include "jpm/error.hpp"
#include "jpm/families.hpp"
#include "jpm/solver.hpp"
#include "oracle.hpp"

using namespace jpm;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

Edges random_edges(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    Edges edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return edges;
}

std::vector<std::uint64_t> masks(const DistanceGraph& g) {
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v)) adj[u] |= std::uint64_t{1} << v;
    return adj;
}

// Largest clique of the complement by exhaustive subset enumeration.
std::size_t complement_clique(const DistanceGraph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool clique = true;
        for (std::size_t u = 0; u < n && clique; ++u)
            for (std::size_t v = u + 1; v < n && clique; ++v)
                if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) clique = false;
        if (clique) best = std::max<std::size_t>(best, std::popcount(s));
    }
    return best;
}

void check_certificate(const DistanceGraph& g, const IndependenceCertificate& cert) {
    CHECK(cert.status == CertificateStatus::Verified);
    CHECK(cert.witness.size() == cert.alpha);
    const auto idx = witness_indices(g, cert);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) CHECK_FALSE(g.adjacent(idx[a], idx[b]));
}

}  // namespace

TEST_CASE("trivial graphs") {
    const DistanceGraph empty = DistanceGraph::from_edges(0, {});
    CHECK(solve_exact(empty).alpha == 0);
    const DistanceGraph edgeless = DistanceGraph::from_edges(9, {});
    CHECK(solve_exact(edgeless).alpha == 9);
    const Edges c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    const DistanceGraph cycle = DistanceGraph::from_edges(5, c5);
    CHECK(solve_exact(cycle).alpha == 2);
    CHECK(solve_brute_force(cycle).alpha == 2);
    Edges k6;
    for (std::size_t u = 0; u < 6; ++u)
        for (std::size_t v = u + 1; v < 6; ++v) k6.emplace_back(u, v);
    CHECK(solve_exact(DistanceGraph::from_edges(6, k6)).alpha == 1);
}

TEST_CASE("exact equals brute force and an independent oracle on random graphs") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(1, 20);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = size(rng);
        const DistanceGraph g = DistanceGraph::from_edges(n, random_edges(rng, n, density(rng)));
        const auto exact = solve_exact(g);
        const auto brute = solve_brute_force(g);
        CHECK(exact.alpha == brute.alpha);
        CHECK(static_cast<int>(exact.alpha) == oracle::mis(masks(g)));
        CHECK(exact.optimal);
        check_certificate(g, exact);
        check_certificate(g, brute);
        CHECK(greedy_lower_bound(g, trial).alpha <= exact.alpha);
    }
}

TEST_CASE("complement clique consistency") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + trial % 13;
        const DistanceGraph g = DistanceGraph::from_edges(n, random_edges(rng, n, 0.4));
        CHECK(solve_exact(g).alpha == complement_clique(g));
    }
}

TEST_CASE("every family instance with at most 24 vertices matches brute force") {
    std::vector<GraphSpec> specs;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int t = -k; t < k; ++t) {
                specs.push_back(GraphSpec::jpm(n, k, t));
                specs.push_back(GraphSpec::kpm(n, k, t));
                if (t >= 0) specs.push_back(GraphSpec::j(n, k, t));
            }
            specs.push_back(GraphSpec::jpm_parity(n, k, Parity::Even));
            specs.push_back(GraphSpec::jpm_parity(n, k, Parity::Odd));
            for (int l = 0; l <= k && k + l <= n; ++l)
                for (int s = -(k + l); s < k + l; ++s) specs.push_back(GraphSpec::jkl(n, k, l, s));
        }
    }
    int checked = 0;
    for (const auto& spec : specs) {
        if (vertex_count(spec) > 24) continue;
        const DistanceGraph g = build_graph(spec);
        const auto exact = solve_exact(g);
        CHECK_MESSAGE(exact.alpha == solve_brute_force(g).alpha, (spec.label()));
        check_certificate(g, exact);
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("published small values") {
    CHECK(solve_exact(build_graph(GraphSpec::jpm(5, 3, -1))).alpha == 14);
    CHECK(solve_exact(build_graph(GraphSpec::jpm(5, 3, 0))).alpha == 20);
    CHECK(solve_exact(build_graph(GraphSpec::jpm(3, 3, -1))).alpha == 2);
    CHECK(solve_exact(build_graph(GraphSpec::jpm(2, 2, 0))).alpha == 2);
}

TEST_CASE("thread count does not change alpha") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(6, 3, -1));
    SolveBudget one;
    SolveBudget four;
    four.threads = 4;
    const auto a = solve_exact(g, one);
    const auto b = solve_exact(g, four);
    CHECK(a.alpha == 21);
    CHECK(b.alpha == 21);
    check_certificate(g, b);
    CHECK(solve_exact(g, one).witness == a.witness);
}

TEST_CASE("budget exhaustion returns a verified lower bound") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(7, 3, -1));
    SolveBudget tiny;
    tiny.node_limit = 1000;
    const auto cert = solve_exact(g, tiny);
    CHECK_FALSE(cert.optimal);
    CHECK(cert.alpha <= 35);
    CHECK(cert.alpha > 0);
    CHECK(verify_independent(g, std::span<const std::string>(cert.witness)).ok());
    SolveBudget zero;
    zero.node_limit = 0;
    CHECK_THROWS_AS(solve_exact(g, zero), Error);
}

TEST_CASE("verification reports the first adjacent pair") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(3, 2, 0));
    const std::vector<std::string> ok{"++0", "--0"};
    CHECK(verify_independent(g, std::span<const std::string>(ok)).ok());
    const std::vector<std::string> bad{"+0+", "++0", "+-0", "0+-"};
    const auto result = verify_independent(g, std::span<const std::string>(bad));
    REQUIRE_FALSE(result.ok());
    CHECK(scalar_product(g.vertices()[result.violation->first], g.vertices()[result.violation->second]) == 0);
    CHECK(result.violation->first < result.violation->second);
    const std::vector<std::string> unknown{"+++"};
    CHECK_THROWS_AS(verify_independent(g, std::span<const std::string>(unknown)), Error);
}

TEST_CASE("greedy is maximal and seeded") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(6, 3, 0));
    const auto a = greedy_lower_bound(g, 5);
    const auto b = greedy_lower_bound(g, 5);
    CHECK(a.witness == b.witness);
    check_certificate(g, a);
    const auto idx = witness_indices(g, a);
    std::vector<bool> in(g.order(), false);
    for (auto v : idx) in[v] = true;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        bool blocked = false;
        for (auto u : idx) blocked = blocked || g.adjacent(u, v);
        CHECK(blocked);
    }
    CHECK_THROWS_AS(solve_brute_force(build_graph(GraphSpec::jpm(5, 2, 0))), Error);
}
