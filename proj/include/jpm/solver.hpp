#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jpm/families.hpp"

namespace jpm {

struct SolveBudget {
    std::chrono::milliseconds time_limit{std::chrono::hours(1)};
    std::uint64_t node_limit = 1'000'000'000;
    unsigned threads = 1;

    /// Throws ErrorCode::InvalidParams unless every limit is positive.
    void validate() const;
};

enum class CertificateStatus { Verified, Unverified, Failed };

struct IndependenceCertificate {
    std::optional<GraphSpec> spec;  // empty for external graphs
    std::size_t alpha = 0;
    std::vector<std::string> witness;
    CertificateStatus status = CertificateStatus::Unverified;
    /// Set when status is Failed: the first adjacent witness pair.
    std::optional<std::pair<std::string, std::string>> violation;
    /// True only when the search completed, i.e. alpha is the exact optimum.
    bool optimal = false;
    std::uint64_t search_nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Either no violation, or the first adjacent pair (u < v) in canonical order.
struct VerifyResult {
    std::optional<std::pair<std::size_t, std::size_t>> violation;
    bool ok() const noexcept { return !violation.has_value(); }
};

VerifyResult verify_independent(const DistanceGraph& g, std::span<const std::size_t> witness);
/// Label-based variant; throws ErrorCode::UnknownVertex.
VerifyResult verify_independent(const DistanceGraph& g, std::span<const std::string> witness);

/// Exact maximum independent set. When the budget runs out the best
/// independent set found so far is returned with optimal = false and
/// status = Unverified.
IndependenceCertificate solve_exact(const DistanceGraph& g, const SolveBudget& budget = {});

/// Maximal independent set by randomized minimum-degree greedy.
IndependenceCertificate greedy_lower_bound(const DistanceGraph& g, std::uint64_t seed = 0);

/// Exhaustive subset enumeration; throws ErrorCode::TooLarge above 24 vertices.
IndependenceCertificate solve_brute_force(const DistanceGraph& g);

/// Vertex indices of a certificate witness in g.
std::vector<std::size_t> witness_indices(const DistanceGraph& g, const IndependenceCertificate& cert);

}  // namespace jpm
