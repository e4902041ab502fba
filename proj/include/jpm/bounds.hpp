#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jpm/families.hpp"
#include "jpm/solver.hpp"

namespace jpm {

/// Largest family in 2^[n] with Hamming diameter at most D. For D >= n the
/// whole cube qualifies and 2^n is returned.
std::uint64_t kleitman_S(int n, int D);

/// Independence number of J(n,3,1); n >= 4.
std::uint64_t nagy_alpha(int n);

/// 0, 1, 2, 2 for n = 0, 1, 2, 3 (mod 4).
int residue_correction(int n);

/// floor(vG * alphaH / vH): the averaging bound for a vertex-transitive G
/// containing a subgraph H. Transitivity of G is the caller's claim.
std::uint64_t katona_upper_bound(std::uint64_t vG, std::uint64_t vH, std::uint64_t alphaH);

enum class ValidityKind { Proven, Asymptotic, Conjectured };

struct Validity {
    ValidityKind kind = ValidityKind::Proven;
    int n_min = 1;                 // inclusive
    std::optional<int> n_max;      // inclusive
    std::string note;

    bool covers(int n) const noexcept { return n >= n_min && (!n_max || n <= *n_max); }
};

const char* to_string(ValidityKind kind) noexcept;

struct PredictedAlpha {
    GraphSpec spec;
    std::uint64_t value = 0;
    std::string source;
    Validity validity;
};

/// Closed-form independence number for a spec, if one is known. A result
/// whose validity does not cover spec.n is never returned.
std::optional<PredictedAlpha> predicted_alpha(const GraphSpec& spec);

/// Lower-bound value of KPM(n,k,t) for even negative t: the caller supplies
/// the independence number of JKL(n, k-|t|/2, |t|/2, t).
std::uint64_t kpm_even_t_value(int n, int k, int t, std::uint64_t alpha_jkl);

/// Non-negative rational kept as a reduced integer pair.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Ratio reduced(std::uint64_t num, std::uint64_t den);
    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend bool operator<(const Ratio& a, const Ratio& b) noexcept {
        return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) noexcept { return !(b < a); }
};

struct RatioRow {
    int n = 0;
    std::uint64_t alpha = 0;
    std::uint64_t vertices = 0;
    Ratio ratio;
};

struct RatioSequence {
    std::vector<RatioRow> rows;
    /// False when some instance ran out of budget; rows stop before it.
    bool complete = true;
    std::optional<int> stopped_at;

    bool non_increasing() const noexcept;
};

/// alpha(JPM(n,k,t)) / |V| for n = n_from..n_to, solved exactly.
RatioSequence ratio_sequence(int k, int t, int n_from, int n_to, const SolveBudget& budget = {});

}  // namespace jpm
