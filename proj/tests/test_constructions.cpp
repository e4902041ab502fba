#include <doctest.h>

#include "jpm/bounds.hpp"
#include "jpm/constructions.hpp"
#include "jpm/error.hpp"
#include "jpm/solver.hpp"
#include "oracle.hpp"

using namespace jpm;

namespace {

// Re-checks a report against the materialized graph of its spec.
void recheck(const ConstructionReport& r) {
    CHECK(r.verified);
    CHECK(r.size == r.family.size());
    const DistanceGraph g = build_graph(r.spec);
    std::vector<std::string> labels;
    for (const auto& v : r.family) labels.push_back(encode(v));
    CHECK(verify_independent(g, std::span<const std::string>(labels)).ok());
}

}  // namespace

TEST_CASE("tail signs") {
    auto r = construct_tail_signs(5, 3, -1);
    recheck(r);
    CHECK(r.size == 10);
    for (const auto& v : r.family) CHECK(v.neg == 0);

    r = construct_tail_signs(4, 2, -2);
    recheck(r);
    // sum_j C(1,j) 2^j C(3,2-j)
    CHECK(r.size == oracle::choose(3, 2) + 2 * oracle::choose(3, 1));

    r = construct_tail_signs(6, 3, -2);
    recheck(r);
    CHECK(r.size == 30);
    CHECK(r.claimed_size == 40);
    CHECK_FALSE(r.notes.empty());

    r = construct_tail_signs(3, 2, -2);
    recheck(r);
    CHECK(r.size == 5);
    CHECK(r.claimed_size == 6);

    CHECK_THROWS_AS(construct_tail_signs(5, 3, 1), Error);
}

TEST_CASE("Kleitman families for odd t have size S(k,|t|-1) C(n,k)") {
    for (int k = 3; k <= 5; ++k) {
        for (int t = -1; -t < k; t -= 2) {
            for (int n = k; n <= 8; ++n) {
                if (vertex_count(GraphSpec::jpm(n, k, t)) > 20000) continue;
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(t);
                const auto r = construct_kleitman_family(n, k, t);
                CHECK(r.size == kleitman_S(k, -t - 1) * binomial(n, k));
                recheck(r);
            }
        }
    }
    CHECK(construct_kleitman_family(5, 3, -1).size == 10);
    CHECK(construct_kleitman_family(6, 4, -3).size == 75);
}

TEST_CASE("Kleitman families for even t") {
    for (int n = 4; n <= 6; ++n) {
        const auto two_part = construct_kleitman_family(n, 3, -2);
        recheck(two_part);
        const auto per_support = construct_kleitman_family(n, 3, -2, KleitmanVariant::PerSupport);
        recheck(per_support);
        CHECK(per_support.size == kleitman_S(3, 1) * binomial(n, 3));
        const auto jkl = solve_exact(build_graph(GraphSpec::jkl(n, 2, 1, -2)));
        CHECK(two_part.size == jkl.alpha + binomial(n, 3));
    }
    CHECK(construct_kleitman_family(4, 3, -2).size == 10);
    CHECK(construct_kleitman_family(6, 3, -2).size == 42);
    recheck(construct_kleitman_family(6, 4, -2));
    CHECK_THROWS_AS(construct_kleitman_family(6, 3, -3, KleitmanVariant::WithJklBlock), Error);
    CHECK_THROWS_AS(construct_kleitman_family(6, 3, -3), Error);
}

TEST_CASE("double sign") {
    const std::vector<PlaceSet> one{make_place_set({1, 2, 3})};
    auto r = construct_double_sign(4, 3, 1, one);
    recheck(r);
    CHECK(r.size == 2);

    for (int n : {7, 12}) {
        const auto witness = support_witness(GraphSpec::j(n, 3, 1));
        CHECK(witness.size() == nagy_alpha(n));
        r = construct_double_sign(n, 3, 1, witness);
        recheck(r);
        CHECK(r.size == 2 * nagy_alpha(n));
    }

    const std::vector<PlaceSet> clash{make_place_set({1, 2, 3}), make_place_set({3, 4, 5})};
    try {
        construct_double_sign(5, 3, 1, clash);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WitnessNotIndependent);
    }
}

TEST_CASE("full sign lift") {
    for (int n = 4; n <= 7; ++n) {
        const auto supports = support_witness(GraphSpec::j(n, 3, 2));
        const auto r = construct_full_sign_lift(GraphSpec::jpm(n, 3, 2), supports);
        recheck(r);
        CHECK(r.size == 8 * supports.size());
    }
    const std::vector<PlaceSet> pairs{make_place_set({1, 2}), make_place_set({3, 4}), make_place_set({5, 6})};
    auto r = construct_full_sign_lift(GraphSpec::jpm_parity(6, 2, Parity::Odd), pairs);
    recheck(r);
    CHECK(r.size == 12);

    // A single support is independent iff the support has no internal edge.
    const std::vector<PlaceSet> single{make_place_set({1, 2, 3})};
    CHECK(construct_full_sign_lift(GraphSpec::jpm(4, 3, 2), single).verified);
    CHECK_FALSE(construct_full_sign_lift(GraphSpec::jpm(4, 3, 1), single).verified);
    CHECK(construct_full_sign_lift(GraphSpec::jpm(4, 3, 1), single).violation.has_value());

    const std::vector<PlaceSet> wrong{make_place_set({1, 2})};
    CHECK_THROWS_AS(construct_full_sign_lift(GraphSpec::jpm(4, 3, 2), wrong), Error);
}

TEST_CASE("pair blocks") {
    for (int n : {4, 6, 8}) {
        const auto r = construct_pair_blocks(n);
        recheck(r);
        CHECK(r.size == static_cast<std::size_t>(2 * n * (n - 2)));
    }
    CHECK_THROWS_AS(construct_pair_blocks(5), Error);
    CHECK_THROWS_AS(construct_pair_blocks(2), Error);
}

TEST_CASE("adjacent pair search") {
    const std::vector<SignedVector> fam{decode("++0"), decode("0+-"), decode("+-0")};
    const auto pair = find_adjacent_pair(GraphSpec::jpm(3, 2, 0), fam);
    REQUIRE(pair.has_value());
    CHECK(encode(pair->first) == "++0");
    CHECK(encode(pair->second) == "+-0");
    const std::vector<SignedVector> clean{decode("++0"), decode("--0")};
    CHECK_FALSE(find_adjacent_pair(GraphSpec::jpm(3, 2, 0), clean).has_value());
}
