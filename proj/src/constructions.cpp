#include "jpm/constructions.hpp"

#include <algorithm>
#include <bit>

#include "jpm/bounds.hpp"
#include "jpm/error.hpp"

namespace jpm {

namespace {

PlaceSet full_mask(int n) { return n >= 64 ? ~PlaceSet{0} : (PlaceSet{1} << n) - 1; }

PlaceSet deposit(std::uint64_t pattern, PlaceSet support) {
    PlaceSet out = 0;
    while (support != 0 && pattern != 0) {
        const PlaceSet low = support & (~support + 1);
        if (pattern & 1U) out |= low;
        pattern >>= 1;
        support &= support - 1;
    }
    return out;
}

// Every signing of `support`, ascending by negative mask.
template <typename Fn>
void for_each_signing(int n, PlaceSet support, Fn&& fn) {
    const int s = std::popcount(support);
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << s); ++pattern) {
        const PlaceSet neg = deposit(pattern, support);
        fn(SignedVector{n, support & ~neg, neg});
    }
}

std::vector<PlaceSet> all_supports(int n, int k) {
    std::vector<PlaceSet> out;
    for (const auto& v : enumerate_vertices(GraphSpec::j(n, k, 0))) out.push_back(v.support());
    return out;
}

// tail-signs also accepts |t| = k, where the graph is a perfect matching.
void require_negative_t(int n, int k, int t, bool allow_matching = false) {
    const bool k_ok = allow_matching ? k >= -t : k > -t;
    if (t >= 0 || !k_ok || k > n || n > kMaxDimension) {
        throw Error(ErrorCode::InvalidParams, std::string("need t < 0, |t| ") + (allow_matching ? "<=" : "<") +
                                                  " k <= n <= 64; got n=" + std::to_string(n) +
                                                  " k=" + std::to_string(k) + " t=" + std::to_string(t));
    }
}

ConstructionReport finish(std::string name, const GraphSpec& spec, std::vector<SignedVector> family,
                          std::optional<std::uint64_t> claimed) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    ConstructionReport report;
    report.name = std::move(name);
    report.spec = spec;
    report.size = family.size();
    report.claimed_size = claimed;
    report.violation = find_adjacent_pair(spec, family);
    report.verified = !report.violation.has_value();
    report.family = std::move(family);
    if (claimed && *claimed != report.size) {
        report.notes.push_back("constructed size " + std::to_string(report.size) +
                               " differs from claimed " + std::to_string(*claimed));
    }
    return report;
}

}  // namespace

std::optional<std::pair<SignedVector, SignedVector>> find_adjacent_pair(
    const GraphSpec& spec, std::span<const SignedVector> family) {
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            if (edge_predicate(spec, family[a], family[b])) return std::make_pair(family[a], family[b]);
        }
    }
    return std::nullopt;
}

ConstructionReport construct_tail_signs(int n, int k, int t) {
    require_negative_t(n, k, t, true);
    const int free_places = -t - 1;
    const PlaceSet tail = full_mask(n) & ~full_mask(n - free_places);
    std::vector<SignedVector> family;
    for (PlaceSet support : all_supports(n, k)) {
        for_each_signing(n, support & tail, [&](const SignedVector& tail_signs) {
            family.push_back({n, support & ~tail_signs.neg, tail_signs.neg});
        });
    }
    const std::uint64_t claimed = (std::uint64_t{1} << free_places) * binomial(n, k);
    return finish("tail-signs", GraphSpec::jpm(n, k, t), std::move(family), claimed);
}

ConstructionReport construct_kleitman_family(int n, int k, int t, KleitmanVariant variant,
                                             const SolveBudget& budget) {
    require_negative_t(n, k, t);
    const int distance = -t;
    const bool even = distance % 2 == 0;
    if (variant == KleitmanVariant::Auto) {
        variant = even ? KleitmanVariant::WithJklBlock : KleitmanVariant::PerSupport;
    }
    if (variant == KleitmanVariant::WithJklBlock && !even) {
        throw Error(ErrorCode::InvalidParams, "the JKL-block variant needs even t");
    }
    const GraphSpec spec = GraphSpec::jpm(n, k, t);
    std::vector<SignedVector> family;

    if (variant == KleitmanVariant::PerSupport) {
        // Odd |t| = 2m+1: at most m negatives. Even |t| = 2m: at most m-1
        // negatives, or a negative last place plus at most m-1 others.
        const int half = (distance - 1) / 2;
        for (PlaceSet support : all_supports(n, k)) {
            const PlaceSet last = PlaceSet{1} << (63 - std::countl_zero(support));
            for_each_signing(n, support, [&](const SignedVector& v) {
                const int negatives = std::popcount(v.neg);
                const bool keep = even ? (negatives <= half || ((v.neg & last) != 0 && negatives <= half + 1))
                                       : negatives <= half;
                if (keep) family.push_back(v);
            });
        }
        const std::uint64_t claimed = kleitman_S(k, distance - 1) * binomial(n, k);
        auto report = finish("kleitman", spec, std::move(family), claimed);
        return report;
    }

    const int m = distance / 2;
    for (PlaceSet support : all_supports(n, k)) {
        for_each_signing(n, support, [&](const SignedVector& v) {
            if (std::popcount(v.neg) <= m - 1) family.push_back(v);
        });
    }
    const GraphSpec block_spec = GraphSpec::jkl(n, k - m, m, t);
    const DistanceGraph block = build_graph(block_spec);
    const IndependenceCertificate cert = solve_exact(block, budget);
    for (std::size_t idx : witness_indices(block, cert)) family.push_back(block.vertices()[idx]);

    const std::uint64_t per_support = kleitman_S(k, distance - 2) * binomial(n, k);
    auto report = finish("kleitman", spec, std::move(family), per_support + cert.alpha);
    report.notes.push_back("JKL block " + block_spec.label() + " contributes " + std::to_string(cert.alpha) +
                           (cert.optimal ? " (exact optimum)" : " (budget exhausted, not proven optimal)"));
    if (k == 3 && t == -2) {
        const std::uint64_t pairs_reading = 2 * binomial(n, 2) + 2;
        const std::uint64_t triples_reading = 2 * binomial(n, 3) + 2;
        report.notes.push_back("stated lower bound readings: 2C(n,2)+2 = " + std::to_string(pairs_reading) +
                               ", 2C(n,3)+2 = " + std::to_string(triples_reading) + "; constructed " +
                               std::to_string(report.size));
    }
    return report;
}

ConstructionReport construct_double_sign(int n, int k, int t, std::span<const PlaceSet> j_witness) {
    if (t <= 0 || t >= k || k > n || n > kMaxDimension) {
        throw Error(ErrorCode::InvalidParams, "double-sign needs 0 < t < k <= n <= 64");
    }
    const PlaceSet limit = full_mask(n);
    for (std::size_t a = 0; a < j_witness.size(); ++a) {
        if (std::popcount(j_witness[a]) != k || (j_witness[a] & ~limit) != 0) {
            throw Error(ErrorCode::WitnessNotIndependent, "witness member is not a k-subset of 1..n");
        }
        for (std::size_t b = a + 1; b < j_witness.size(); ++b) {
            const int shared = std::popcount(j_witness[a] & j_witness[b]);
            if (j_witness[a] == j_witness[b] || shared == t) {
                throw Error(ErrorCode::WitnessNotIndependent,
                            "witness supports share exactly t places or repeat");
            }
        }
    }
    std::vector<SignedVector> family;
    for (PlaceSet s : j_witness) {
        family.push_back({n, s, 0});
        family.push_back({n, 0, s});
    }
    return finish("double-sign", GraphSpec::jpm(n, k, t), std::move(family),
                  2 * static_cast<std::uint64_t>(j_witness.size()));
}

ConstructionReport construct_full_sign_lift(const GraphSpec& spec, std::span<const PlaceSet> supports) {
    spec.validate();
    const PlaceSet limit = full_mask(spec.n);
    std::vector<PlaceSet> sorted(supports.begin(), supports.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (std::popcount(sorted[i]) != spec.support_size() || (sorted[i] & ~limit) != 0 ||
            (i > 0 && sorted[i] == sorted[i - 1])) {
            throw Error(ErrorCode::BadSupport, "supports must be distinct " + std::to_string(spec.support_size()) +
                                                   "-subsets of 1.." + std::to_string(spec.n));
        }
    }
    std::vector<SignedVector> family;
    for (PlaceSet s : sorted) {
        for_each_signing(spec.n, s, [&](const SignedVector& v) {
            const bool member = !spec.is_signed() ? v.neg == 0
                                : spec.kind == FamilyKind::JKL ? std::popcount(v.neg) == spec.l
                                                               : true;
            if (member) family.push_back(v);
        });
    }
    const std::uint64_t per_support = spec.kind == FamilyKind::JKL ? binomial(spec.k + spec.l, spec.l)
                                      : spec.is_signed()           ? (std::uint64_t{1} << spec.k)
                                                                   : 1;
    return finish("full-sign-lift", spec, std::move(family), per_support * sorted.size());
}

std::vector<PlaceSet> support_witness(const GraphSpec& unsigned_spec, const SolveBudget& budget) {
    if (unsigned_spec.is_signed()) {
        throw Error(ErrorCode::InvalidParams, "support witnesses come from unsigned families");
    }
    const DistanceGraph g = build_graph(unsigned_spec);
    const IndependenceCertificate cert = solve_exact(g, budget);
    std::vector<PlaceSet> supports;
    for (std::size_t idx : witness_indices(g, cert)) supports.push_back(g.vertices()[idx].support());
    return supports;
}

ConstructionReport construct_pair_blocks(int n) {
    if (n < 4 || n % 2 != 0 || n > kMaxDimension) {
        throw Error(ErrorCode::InvalidParams, "pair blocks need even n in 4..64, got " + std::to_string(n));
    }
    std::vector<PlaceSet> supports;
    for (int i = 0; i < n / 2; ++i) {
        for (int j = i + 1; j < n / 2; ++j) {
            supports.push_back((PlaceSet{3} << (2 * i)) | (PlaceSet{3} << (2 * j)));
        }
    }
    auto report = construct_full_sign_lift(GraphSpec::jpm(n, 4, 1), supports);
    report.name = "pair-blocks";
    report.claimed_size = 2 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 2);
    return report;
}

}  // namespace jpm
