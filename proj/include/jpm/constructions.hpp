#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jpm/families.hpp"
#include "jpm/solver.hpp"

namespace jpm {

/// An explicit independent-set construction together with its check.
struct ConstructionReport {
    std::string name;
    GraphSpec spec;
    std::vector<SignedVector> family;  // canonical order
    std::size_t size = 0;
    std::optional<std::uint64_t> claimed_size;
    bool verified = false;
    /// First adjacent pair when verification fails.
    std::optional<std::pair<SignedVector, SignedVector>> violation;
    std::vector<std::string> notes;
};

/// First pair of family members joined by an edge of spec, scanning in the
/// given order. Evaluates the edge predicate directly, without a graph.
std::optional<std::pair<SignedVector, SignedVector>> find_adjacent_pair(
    const GraphSpec& spec, std::span<const SignedVector> family);

/// Positive signs on places 1..n-|t|+1, free signs on the last |t|-1 places.
/// Requires t < 0 and k > |t|.
ConstructionReport construct_tail_signs(int n, int k, int t);

enum class KleitmanVariant {
    Auto,          // per-support for odd t, with the JKL block for even t
    PerSupport,    // per support, a maximum sign family of diameter |t|-1
    WithJklBlock,  // even t only: <= |t|/2-1 negatives plus a JKL independent set
};

/// Kleitman sign families on every support, for t < 0 and k > |t|. The JKL
/// block of the even-t variant is an exact (budget permitting) maximum
/// independent set of JKL(n, k-|t|/2, |t|/2, t).
ConstructionReport construct_kleitman_family(int n, int k, int t,
                                             KleitmanVariant variant = KleitmanVariant::Auto,
                                             const SolveBudget& budget = {});

/// All-plus and all-minus vertex on each support of an independent set of
/// J(n,k,t), t > 0. Throws WitnessNotIndependent for a bad witness.
ConstructionReport construct_double_sign(int n, int k, int t, std::span<const PlaceSet> j_witness);

/// Every vertex of spec whose support is listed, checked against spec.
ConstructionReport construct_full_sign_lift(const GraphSpec& spec, std::span<const PlaceSet> supports);

/// Supports of a maximum (budget permitting) independent set of an
/// unsigned family such as J(n,k,t) or JParity(n,k,p).
std::vector<PlaceSet> support_witness(const GraphSpec& unsigned_spec, const SolveBudget& budget = {});

/// Places paired as {1,2},{3,4},...; all vertices of JPM(n,4,1) supported on
/// a union of two pairs. Requires even n >= 4.
ConstructionReport construct_pair_blocks(int n);

}  // namespace jpm
