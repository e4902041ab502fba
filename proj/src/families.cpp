#include "jpm/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "jpm/error.hpp"

namespace jpm {

namespace {

[[noreturn]] void invalid(const GraphSpec& spec, const std::string& why) {
    throw Error(ErrorCode::InvalidSpec, spec.label() + ": " + why);
}

PlaceSet full_mask(int n) {
    return n >= 64 ? ~PlaceSet{0} : (PlaceSet{1} << n) - 1;
}

// Next integer with the same popcount (Gosper's hack); 0 once past `limit`.
PlaceSet next_combination(PlaceSet x, PlaceSet limit) {
    const PlaceSet lowest = x & (~x + 1);
    const PlaceSet ripple = x + lowest;
    if (ripple == 0) return 0;
    const PlaceSet ones = ((x ^ ripple) >> 2) / lowest;
    const PlaceSet next = ripple | ones;
    return (next & ~limit) != 0 ? 0 : next;
}

// Spreads the low bits of `pattern` over the places of `support`, lowest first.
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

int parity_value(Parity p) { return p == Parity::Even ? 0 : 1; }

}  // namespace

PlaceSet make_place_set(std::span<const int> places) {
    PlaceSet set = 0;
    for (int p : places) {
        if (p < 1 || p > kMaxDimension) {
            throw Error(ErrorCode::BadPlaces, "place " + std::to_string(p) + " outside 1..64");
        }
        set |= PlaceSet{1} << (p - 1);
    }
    return set;
}

PlaceSet make_place_set(std::initializer_list<int> places) {
    return make_place_set(std::span<const int>(places.begin(), places.size()));
}

std::vector<int> places_of(PlaceSet set) {
    std::vector<int> out;
    while (set != 0) {
        out.push_back(std::countr_zero(set) + 1);
        set &= set - 1;
    }
    return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // acc holds C(n - k + i - 1, i - 1) here, so the division is exact.
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > UINT64_MAX) {
            throw Error(ErrorCode::Overflow,
                        "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

int SignedVector::weight() const noexcept { return std::popcount(support()); }

std::string encode(const SignedVector& v) {
    std::string out(static_cast<std::size_t>(v.n), '0');
    for (int p = 0; p < v.n; ++p) {
        const PlaceSet bit = PlaceSet{1} << p;
        if (v.pos & bit) out[static_cast<std::size_t>(p)] = '+';
        else if (v.neg & bit) out[static_cast<std::size_t>(p)] = '-';
    }
    return out;
}

SignedVector decode(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxDimension)) {
        throw Error(ErrorCode::Parse, "vector encoding must have length 1..64");
    }
    SignedVector v;
    v.n = static_cast<int>(text.size());
    for (std::size_t p = 0; p < text.size(); ++p) {
        const PlaceSet bit = PlaceSet{1} << p;
        switch (text[p]) {
            case '+': v.pos |= bit; break;
            case '-': v.neg |= bit; break;
            case '0': break;
            default:
                throw Error(ErrorCode::Parse, "bad character in vector encoding '" +
                                                  std::string(text) + "'");
        }
    }
    return v;
}

int scalar_product(const SignedVector& u, const SignedVector& v) {
    if (u.n != v.n) {
        throw Error(ErrorCode::DimensionMismatch, "scalar product of vectors of dimension " +
                                                      std::to_string(u.n) + " and " +
                                                      std::to_string(v.n));
    }
    const int agree = std::popcount((u.pos & v.pos) | (u.neg & v.neg));
    const int disagree = std::popcount((u.pos & v.neg) | (u.neg & v.pos));
    return agree - disagree;
}

const char* to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::JPM: return "jpm";
        case FamilyKind::J: return "j";
        case FamilyKind::KPM: return "kpm";
        case FamilyKind::JKL: return "jkl";
        case FamilyKind::JParity: return "jparity";
        case FamilyKind::JPMParity: return "jpmparity";
    }
    return "?";
}

const char* to_string(Parity parity) noexcept { return parity == Parity::Even ? "even" : "odd"; }

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
    for (auto kind : {FamilyKind::JPM, FamilyKind::J, FamilyKind::KPM, FamilyKind::JKL,
                      FamilyKind::JParity, FamilyKind::JPMParity}) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

std::optional<Parity> parse_parity(std::string_view name) {
    if (name == "even") return Parity::Even;
    if (name == "odd") return Parity::Odd;
    return std::nullopt;
}

std::string GraphSpec::label() const {
    std::string out = to_string(kind);
    out += "(" + std::to_string(n) + "," + std::to_string(k);
    switch (kind) {
        case FamilyKind::JKL: out += "," + std::to_string(l) + "," + std::to_string(t); break;
        case FamilyKind::JParity:
        case FamilyKind::JPMParity: out += std::string(",") + jpm::to_string(parity); break;
        default: out += "," + std::to_string(t); break;
    }
    return out + ")";
}

void GraphSpec::validate() const {
    if (n < 1 || n > kMaxDimension) invalid(*this, "n must lie in 1..64");
    if (k < 1 || k > n) invalid(*this, "k must lie in 1..n");
    switch (kind) {
        case FamilyKind::JPM:
            // k = n is accepted for every t in range; such graphs may be edgeless.
            if (t < -k || t >= k) invalid(*this, "t must satisfy -k <= t < k");
            break;
        case FamilyKind::J:
            if (t < 0 || t >= k) invalid(*this, "t must satisfy 0 <= t < k");
            break;
        case FamilyKind::KPM:
            if (t < -k || t >= k) invalid(*this, "t must satisfy -k <= t < k");
            break;
        case FamilyKind::JKL:
            if (l < 0 || l > k) invalid(*this, "l must satisfy 0 <= l <= k");
            if (k + l > n) invalid(*this, "k + l must not exceed n");
            if (t < -(k + l) || t >= k + l) invalid(*this, "s must satisfy -(k+l) <= s < k+l");
            break;
        case FamilyKind::JParity:
        case FamilyKind::JPMParity:
            break;
    }
}

std::uint64_t vertex_count(const GraphSpec& spec) {
    spec.validate();
    const std::uint64_t supports = binomial(spec.n, spec.support_size());
    std::uint64_t signs = 1;
    switch (spec.kind) {
        case FamilyKind::J:
        case FamilyKind::JParity: signs = 1; break;
        case FamilyKind::JKL: signs = binomial(spec.k + spec.l, spec.l); break;
        default: signs = spec.k >= 64 ? 0 : std::uint64_t{1} << spec.k; break;
    }
    std::uint64_t total = 0;
    if (signs == 0 || __builtin_mul_overflow(supports, signs, &total)) {
        throw Error(ErrorCode::Overflow, spec.label() + ": vertex count exceeds 64 bits");
    }
    return total;
}

std::vector<SignedVector> enumerate_vertices(const GraphSpec& spec) {
    const std::uint64_t count = vertex_count(spec);
    std::vector<SignedVector> out;
    out.reserve(static_cast<std::size_t>(count));

    const int s = spec.support_size();
    const PlaceSet limit = full_mask(spec.n);
    for (PlaceSet support = full_mask(s); support != 0; support = next_combination(support, limit)) {
        switch (spec.kind) {
            case FamilyKind::J:
            case FamilyKind::JParity:
                out.push_back({spec.n, support, 0});
                break;
            case FamilyKind::JKL:
                for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << s); ++pattern) {
                    if (std::popcount(pattern) != spec.l) continue;
                    const PlaceSet neg = deposit(pattern, support);
                    out.push_back({spec.n, support & ~neg, neg});
                }
                break;
            default:
                for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << s); ++pattern) {
                    const PlaceSet neg = deposit(pattern, support);
                    out.push_back({spec.n, support & ~neg, neg});
                }
                break;
        }
        if (s == spec.n) break;
    }
    return out;
}

bool edge_predicate(const GraphSpec& spec, const SignedVector& u, const SignedVector& v) {
    if (u == v) return false;
    const int product = scalar_product(u, v);
    switch (spec.kind) {
        case FamilyKind::KPM: return product <= spec.t;
        case FamilyKind::JParity:
        case FamilyKind::JPMParity: return ((product % 2) + 2) % 2 == parity_value(spec.parity);
        default: return product == spec.t;
    }
}

DistanceGraph::DistanceGraph(std::optional<GraphSpec> spec, std::vector<SignedVector> vertices,
                             std::vector<Bitset> rows)
    : spec_(std::move(spec)), vertices_(std::move(vertices)), rows_(std::move(rows)) {}

DistanceGraph DistanceGraph::from_edges(
    std::size_t order, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    std::vector<Bitset> rows(order, Bitset(order));
    for (auto [a, b] : edges) {
        if (a >= order || b >= order) {
            throw Error(ErrorCode::UnknownVertex, "edge endpoint outside vertex range");
        }
        if (a == b) continue;
        rows[a].set(b);
        rows[b].set(a);
    }
    return DistanceGraph(std::nullopt, {}, std::move(rows));
}

std::size_t DistanceGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

std::optional<std::size_t> DistanceGraph::index_of(const SignedVector& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t DistanceGraph::index_of_label(std::string_view label) const {
    if (has_vectors()) {
        SignedVector v;
        try {
            v = decode(label);
        } catch (const Error&) {
            throw Error(ErrorCode::UnknownVertex, "'" + std::string(label) + "' is not a vertex");
        }
        if (auto idx = index_of(v)) return *idx;
        throw Error(ErrorCode::UnknownVertex, "'" + std::string(label) + "' is not a vertex");
    }
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), index);
    if (ec != std::errc{} || ptr != label.data() + label.size() || index == 0 || index > order()) {
        throw Error(ErrorCode::UnknownVertex, "'" + std::string(label) + "' is not a vertex");
    }
    return index - 1;
}

std::string DistanceGraph::vertex_label(std::size_t v) const {
    return has_vectors() ? encode(vertices_[v]) : std::to_string(v + 1);
}

DistanceGraph build_graph(const GraphSpec& spec, std::size_t vertex_cap) {
    const std::uint64_t count = vertex_count(spec);
    if (count > vertex_cap) {
        throw Error(ErrorCode::TooLarge, spec.label() + " has " + std::to_string(count) +
                                             " vertices, cap is " + std::to_string(vertex_cap));
    }
    auto vertices = enumerate_vertices(spec);
    const std::size_t m = vertices.size();
    std::vector<Bitset> rows(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (edge_predicate(spec, vertices[i], vertices[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    }
    return DistanceGraph(spec, std::move(vertices), std::move(rows));
}

DistanceGraph induced_subgraph(const DistanceGraph& g, std::span<const std::size_t> keep) {
    std::vector<std::size_t> order(keep.begin(), keep.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (auto v : order) {
        if (v >= g.order()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    }
    const std::size_t m = order.size();
    std::vector<Bitset> rows(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (g.adjacent(order[i], order[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    }
    std::vector<SignedVector> vertices;
    if (g.has_vectors()) {
        vertices.reserve(m);
        for (auto v : order) vertices.push_back(g.vertices()[v]);
    }
    return DistanceGraph(g.spec(), std::move(vertices), std::move(rows));
}

DistanceGraph induced_on_supports(const DistanceGraph& g, std::span<const PlaceSet> supports) {
    if (!g.has_vectors()) {
        throw Error(ErrorCode::BadSupport, "graph has no vertex vectors to match supports against");
    }
    const GraphSpec& spec = *g.spec();
    const PlaceSet limit = full_mask(spec.n);
    std::vector<PlaceSet> wanted(supports.begin(), supports.end());
    for (PlaceSet s : wanted) {
        if (std::popcount(s) != spec.support_size() || (s & ~limit) != 0) {
            throw Error(ErrorCode::BadSupport, "support {" + [&] {
                std::string txt;
                for (int p : places_of(s)) txt += (txt.empty() ? "" : ",") + std::to_string(p);
                return txt;
            }() + "} is not a " + std::to_string(spec.support_size()) + "-subset of 1.." +
                                                   std::to_string(spec.n));
        }
    }
    std::sort(wanted.begin(), wanted.end());
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (std::binary_search(wanted.begin(), wanted.end(), g.vertices()[v].support())) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

}  // namespace jpm
