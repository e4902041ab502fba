#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jpm/bitset.hpp"

namespace jpm {

/// Set of places 1..n packed into one word; place p lives in bit p-1.
using PlaceSet = std::uint64_t;

inline constexpr int kMaxDimension = 64;
inline constexpr std::size_t kDefaultVertexCap = 200'000;

PlaceSet make_place_set(std::span<const int> places);
PlaceSet make_place_set(std::initializer_list<int> places);
std::vector<int> places_of(PlaceSet set);

/// Checked binomial coefficient; throws ErrorCode::Overflow past 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// A {-1,0,+1} vector in dimension n, stored as disjoint place sets.
struct SignedVector {
    int n = 0;
    PlaceSet pos = 0;
    PlaceSet neg = 0;

    PlaceSet support() const noexcept { return pos | neg; }
    int weight() const noexcept;

    /// Canonical order: support as an integer, then the negative mask.
    friend std::strong_ordering operator<=>(const SignedVector& a, const SignedVector& b) noexcept {
        if (auto c = a.support() <=> b.support(); c != 0) return c;
        if (auto c = a.neg <=> b.neg; c != 0) return c;
        return a.n <=> b.n;
    }
    friend bool operator==(const SignedVector&, const SignedVector&) = default;
};

/// Encoding over {+,-,0}, length n, place 1 leftmost.
std::string encode(const SignedVector& v);
SignedVector decode(std::string_view text);

/// Dot product of the expanded vectors. Throws DimensionMismatch.
int scalar_product(const SignedVector& u, const SignedVector& v);

enum class FamilyKind { JPM, J, KPM, JKL, JParity, JPMParity };
enum class Parity { Even, Odd };

const char* to_string(FamilyKind kind) noexcept;
const char* to_string(Parity parity) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view name);
std::optional<Parity> parse_parity(std::string_view name);

/// Symbolic description of one graph instance.
///
/// For JKL, k counts the +1 entries, l the -1 entries and t holds the edge
/// product s. Parity kinds ignore t and use `parity` instead.
struct GraphSpec {
    FamilyKind kind = FamilyKind::JPM;
    int n = 0;
    int k = 0;
    int t = 0;
    int l = 0;
    Parity parity = Parity::Even;

    static GraphSpec jpm(int n, int k, int t) { return {FamilyKind::JPM, n, k, t, 0, Parity::Even}; }
    static GraphSpec j(int n, int k, int t) { return {FamilyKind::J, n, k, t, 0, Parity::Even}; }
    static GraphSpec kpm(int n, int k, int t) { return {FamilyKind::KPM, n, k, t, 0, Parity::Even}; }
    static GraphSpec jkl(int n, int k, int l, int s) { return {FamilyKind::JKL, n, k, s, l, Parity::Even}; }
    static GraphSpec jparity(int n, int k, Parity p) { return {FamilyKind::JParity, n, k, 0, 0, p}; }
    static GraphSpec jpm_parity(int n, int k, Parity p) { return {FamilyKind::JPMParity, n, k, 0, 0, p}; }

    /// Number of nonzero coordinates of every vertex.
    int support_size() const noexcept { return kind == FamilyKind::JKL ? k + l : k; }
    bool is_signed() const noexcept { return kind != FamilyKind::J && kind != FamilyKind::JParity; }

    /// Throws ErrorCode::InvalidSpec when parameters are out of range.
    void validate() const;
    std::string label() const;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

std::uint64_t vertex_count(const GraphSpec& spec);
std::vector<SignedVector> enumerate_vertices(const GraphSpec& spec);
bool edge_predicate(const GraphSpec& spec, const SignedVector& u, const SignedVector& v);

/// Materialized graph with one adjacency bit row per vertex. Immutable once
/// built. Graphs read from external files carry no spec and no vertex
/// vectors; their vertices are labelled by 1-based index.
class DistanceGraph {
public:
    DistanceGraph() = default;
    DistanceGraph(std::optional<GraphSpec> spec, std::vector<SignedVector> vertices,
                  std::vector<Bitset> rows);

    /// Graph on `order` anonymous vertices with the given 0-based edges.
    static DistanceGraph from_edges(std::size_t order,
                                    std::span<const std::pair<std::size_t, std::size_t>> edges);

    const std::optional<GraphSpec>& spec() const noexcept { return spec_; }
    std::span<const SignedVector> vertices() const noexcept { return vertices_; }
    bool has_vectors() const noexcept { return spec_.has_value(); }

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept;
    std::size_t degree(std::size_t v) const noexcept { return rows_[v].count(); }
    bool adjacent(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
    const Bitset& row(std::size_t v) const noexcept { return rows_[v]; }

    std::optional<std::size_t> index_of(const SignedVector& v) const;
    /// Resolves a vertex label (vector encoding, or 1-based index for
    /// anonymous graphs). Throws ErrorCode::UnknownVertex.
    std::size_t index_of_label(std::string_view label) const;
    std::string vertex_label(std::size_t v) const;

private:
    std::optional<GraphSpec> spec_;
    std::vector<SignedVector> vertices_;
    std::vector<Bitset> rows_;
};

DistanceGraph build_graph(const GraphSpec& spec, std::size_t vertex_cap = kDefaultVertexCap);

/// Induced subgraph on the given vertex indices, kept in ascending order.
DistanceGraph induced_subgraph(const DistanceGraph& g, std::span<const std::size_t> keep);

/// Induced subgraph on all vertices whose support is one of `supports`.
/// Throws ErrorCode::BadSupport for sets of the wrong size or outside 1..n.
DistanceGraph induced_on_supports(const DistanceGraph& g, std::span<const PlaceSet> supports);

}  // namespace jpm
