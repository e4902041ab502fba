#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "jpm/error.hpp"
#include "jpm/families.hpp"
#include "jpm/rs_hypergraph.hpp"
#include "oracle.hpp"

using namespace jpm;

namespace {

oracle::Vec to_ints(const SignedVector& v) {
    oracle::Vec out(v.n, 0);
    for (int i = 0; i < v.n; ++i) {
        if (v.pos >> i & 1) out[i] = 1;
        if (v.neg >> i & 1) out[i] = -1;
    }
    return out;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK_THROWS_AS(binomial(100, 50), Error);
}

TEST_CASE("encode and decode") {
    const SignedVector v = decode("+-0+");
    CHECK(v.n == 4);
    CHECK(places_of(v.pos) == std::vector<int>{1, 4});
    CHECK(places_of(v.neg) == std::vector<int>{2});
    CHECK(encode(v) == "+-0+");
    CHECK(v.weight() == 3);
    CHECK_THROWS_AS(decode("+x0"), Error);
    CHECK(scalar_product(decode("+-0"), decode("++0")) == 0);
    CHECK(scalar_product(decode("+-+"), decode("-+-")) == -3);
    CHECK_THROWS_AS(scalar_product(decode("+-"), decode("+-0")), Error);
}

TEST_CASE("spec validation") {
    CHECK_NOTHROW(GraphSpec::jpm(5, 3, -1).validate());
    CHECK_NOTHROW(GraphSpec::jpm(3, 3, -3).validate());
    CHECK_THROWS_AS(GraphSpec::jpm(5, 3, 3).validate(), Error);
    CHECK_THROWS_AS(GraphSpec::jpm(5, 3, -4).validate(), Error);
    CHECK_THROWS_AS(GraphSpec::jpm(3, 4, 0).validate(), Error);
    CHECK_THROWS_AS(GraphSpec::j(5, 3, -1).validate(), Error);
    CHECK_THROWS_AS(GraphSpec::jkl(4, 3, 2, 0).validate(), Error);
    CHECK_THROWS_AS(GraphSpec::jpm(65, 3, 0).validate(), Error);
    try {
        GraphSpec::jpm(4, 3, 3).validate();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidSpec);
    }
}

TEST_CASE("vertex counts match enumeration and closed forms") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto jpm_spec = GraphSpec::jpm(n, k, 0);
            CHECK(vertex_count(jpm_spec) == oracle::choose(n, k) << k);
            CHECK(enumerate_vertices(jpm_spec).size() == oracle::weight_k(n, k).size());
            CHECK(vertex_count(GraphSpec::j(n, k, 0)) == oracle::choose(n, k));
            for (int l = 0; l <= k && k + l <= n; ++l) {
                CHECK(vertex_count(GraphSpec::jkl(n, k, l, 0)) == oracle::signed_vectors(n, k, l).size());
            }
        }
    }
}

TEST_CASE("enumeration is canonical and distinct") {
    for (const auto& spec : {GraphSpec::jpm(6, 3, 0), GraphSpec::jkl(6, 2, 2, 0), GraphSpec::j(7, 3, 1)}) {
        const auto vs = enumerate_vertices(spec);
        CHECK(std::is_sorted(vs.begin(), vs.end()));
        CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
    }
}

TEST_CASE("adjacency agrees with integer dot products") {
    std::mt19937_64 rng(7);
    struct Case {
        GraphSpec spec;
        std::function<bool(int)> edge;
    };
    const std::vector<Case> cases = {
        {GraphSpec::jpm(6, 3, -1), [](int p) { return p == -1; }},
        {GraphSpec::jpm(6, 3, 0), [](int p) { return p == 0; }},
        {GraphSpec::kpm(6, 3, 0), [](int p) { return p <= 0; }},
        {GraphSpec::j(7, 3, 1), [](int p) { return p == 1; }},
        {GraphSpec::jkl(6, 2, 1, -2), [](int p) { return p == -2; }},
        {GraphSpec::jparity(6, 2, Parity::Odd), [](int p) { return ((p % 2) + 2) % 2 == 1; }},
        {GraphSpec::jpm_parity(5, 2, Parity::Even), [](int p) { return ((p % 2) + 2) % 2 == 0; }},
    };
    for (const auto& c : cases) {
        const DistanceGraph g = build_graph(c.spec);
        const auto vs = g.vertices();
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        for (int trial = 0; trial < 2000; ++trial) {
            const std::size_t u = pick(rng);
            const std::size_t v = pick(rng);
            const bool expected = u != v && c.edge(oracle::dot(to_ints(vs[u]), to_ints(vs[v])));
            CHECK(g.adjacent(u, v) == expected);
            CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        for (std::size_t v = 0; v < g.order(); ++v) CHECK_FALSE(g.adjacent(v, v));
    }
}

TEST_CASE("J(5,3,1) degree") {
    // A 3-set meets another in exactly one place: 3 * C(2,2) choices.
    const DistanceGraph g = build_graph(GraphSpec::j(5, 3, 1));
    CHECK(g.order() == 10);
    for (std::size_t v = 0; v < g.order(); ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("t = -k gives a perfect matching") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(3, 3, -3));
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 4);
    for (std::size_t v = 0; v < g.order(); ++v) CHECK(g.degree(v) == 1);
    const DistanceGraph h = build_graph(GraphSpec::jpm(5, 2, -2));
    CHECK(h.edge_count() == h.order() / 2);
}

TEST_CASE("edge counts match a pairwise oracle") {
    for (const auto& [n, k, t] : std::vector<std::tuple<int, int, int>>{{4, 2, 0}, {5, 3, -1}, {5, 3, 1}, {6, 2, -1}}) {
        const auto vs = oracle::weight_k(n, k);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) edges += oracle::dot(vs[i], vs[j]) == t;
        CHECK(build_graph(GraphSpec::jpm(n, k, t)).edge_count() == edges);
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(build_graph(GraphSpec::jpm(30, 5, 0)), Error);
    CHECK_THROWS_AS(build_graph(GraphSpec::jpm(6, 3, 0), 100), Error);
}

TEST_CASE("labels and lookups") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(4, 2, 0));
    for (std::size_t v = 0; v < g.order(); ++v) CHECK(g.index_of_label(g.vertex_label(v)) == v);
    CHECK_THROWS_AS(g.index_of_label("+++0"), Error);
    const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}};
    const DistanceGraph a = DistanceGraph::from_edges(3, edges);
    CHECK(a.vertex_label(2) == "3");
    CHECK(a.index_of_label("1") == 0);
    CHECK_THROWS_AS(a.index_of_label("4"), Error);
}

TEST_CASE("Fano-supported subgraph of JPM(7,3,-1)") {
    const DistanceGraph g = build_graph(GraphSpec::jpm(7, 3, -1));
    const std::vector<int> places{1, 2, 3, 4, 5, 6, 7};
    const auto lines = fano_supports(places);
    CHECK(lines.size() == 7);
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) CHECK(std::popcount(lines[a] & lines[b]) == 1);
    const DistanceGraph h = induced_on_supports(g, lines);
    CHECK(h.order() == 56);
    const std::vector<int> shuffled{4, 7, 1, 3, 6, 2, 5};
    CHECK(induced_on_supports(g, fano_supports(shuffled)).order() == 56);
    const std::vector<PlaceSet> bad{make_place_set({1, 2})};
    CHECK_THROWS_AS(induced_on_supports(g, bad), Error);
}
