#include "jpm/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "jpm/error.hpp"

namespace jpm {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "product exceeds 64 bits");
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "sum exceeds 64 bits");
    return out;
}

std::uint64_t pow2(int k) {
    if (k >= 64) throw Error(ErrorCode::Overflow, "2^k exceeds 64 bits");
    return std::uint64_t{1} << k;
}

PredictedAlpha make(const GraphSpec& spec, std::uint64_t value, std::string source, ValidityKind kind,
                    int n_min, std::optional<int> n_max = std::nullopt, std::string note = {}) {
    return {spec, value, std::move(source), Validity{kind, n_min, n_max, std::move(note)}};
}

// Divisibility conditions for a Steiner (n, k, k-1)-system.
bool steiner_divisible(int n, int k) {
    for (int i = 0; i <= k - 2; ++i) {
        if (binomial(n - i, k - 1 - i) % binomial(k - i, k - 1 - i) != 0) return false;
    }
    return true;
}

std::optional<PredictedAlpha> predict_jpm(const GraphSpec& spec) {
    const int n = spec.n;
    const int k = spec.k;
    const int t = spec.t;

    if (t == -k) {
        return make(spec, binomial(n, k) * pow2(k - 1), "antipodal matching", ValidityKind::Proven, k);
    }
    if (k == 2) {
        if (t == -1) {
            const std::uint64_t small[] = {0, 0, 4, 4, 8};
            if (n <= 4) return make(spec, small[n], "k=2 hand computation", ValidityKind::Proven, 2, 4);
            return make(spec, binomial(n, 2), "k=2, t=-1 monotone ratio argument", ValidityKind::Proven, 5);
        }
        if (t == 0) {
            const std::uint64_t small[] = {0, 0, 2, 6, 6};
            if (n <= 4) return make(spec, small[n], "k=2 hand computation", ValidityKind::Proven, 2, 4);
            return make(spec, 2 * static_cast<std::uint64_t>(n - 1), "k=2, t=0 transversal argument",
                        ValidityKind::Proven, 5);
        }
        if (t == 1) {
            const std::uint64_t value = n % 2 == 0 ? 2 * static_cast<std::uint64_t>(n)
                                                   : 2 * static_cast<std::uint64_t>(n - 1);
            return make(spec, value, "k=2, t=1 perfect-matching sign lift", ValidityKind::Proven, 2);
        }
    }
    if (k == 3) {
        if (t == -1) {
            const std::uint64_t small[] = {0, 0, 0, 2, 8, 14, 21};
            if (n <= 6) return make(spec, small[n], "k=3, t=-1 exact search", ValidityKind::Proven, 3, 6);
            return make(spec, binomial(n, 3), "k=3, t=-1 Fano averaging", ValidityKind::Proven, 7);
        }
        if (t == 0) {
            const std::uint64_t small[] = {0, 0, 0, 8, 8, 20, 32, 56, 56};
            if (n <= 8) return make(spec, small[n], "k=3, t=0 exact search", ValidityKind::Proven, 3, 8);
            return make(spec, 2 * binomial(n - 1, 2), "k=3, t=0 transversal argument", ValidityKind::Proven, 9);
        }
        if (t == 1) {
            const std::int64_t a = 6 * static_cast<std::int64_t>(n) - 28;
            const std::int64_t b = 4 * static_cast<std::int64_t>(n) - 4 * residue_correction(n);
            return make(spec, static_cast<std::uint64_t>(std::max(a, b)), "max{6n-28, 4n-4c(n)}",
                        ValidityKind::Proven, 3);
        }
    }
    if (t == -1) {
        // n > k 2^(k+1).
        const std::uint64_t threshold = checked_mul(static_cast<std::uint64_t>(k), pow2(k + 1));
        if (static_cast<std::uint64_t>(n) > threshold) {
            return make(spec, binomial(n, k), "t=-1 Reed-Solomon averaging", ValidityKind::Proven,
                        static_cast<int>(threshold) + 1);
        }
    }
    if (t < 0 && (-t) % 2 == 1) {
        return make(spec, checked_mul(kleitman_S(k, -t - 1), binomial(n, k)),
                    "odd negative t: S(k,|t|-1) C(n,k)", ValidityKind::Asymptotic, k + 1,
                    std::nullopt, "holds for n > n0(k,t), n0 not explicit");
    }
    if (t == 0) {
        return make(spec, 2 * binomial(n - 1, k - 1), "t=0: 2 C(n-1,k-1)", ValidityKind::Asymptotic, k + 1,
                    std::nullopt, "holds for n > c k^3 2^k, c not explicit");
    }
    if (t == k - 1 && n > k && steiner_divisible(n, k)) {
        return make(spec, checked_mul(pow2(k), binomial(n, k - 1) / static_cast<std::uint64_t>(k)),
                    "t=k-1: 2^k times a Steiner (n,k,k-1)-system", ValidityKind::Asymptotic, k + 1,
                    std::nullopt, "Steiner system exists for n > n0(k) under divisibility");
    }
    return std::nullopt;
}

std::optional<std::uint64_t> parity_family_alpha(int n, int k, Parity parity) {
    if (parity == Parity::Odd && k % 2 == 0) return binomial(n / 2, k / 2);
    if (parity == Parity::Even && k % 2 == 1) return binomial((n - 1) / 2, (k - 1) / 2);
    return std::nullopt;
}

std::optional<PredictedAlpha> predict(const GraphSpec& spec) {
    const int n = spec.n;
    const int k = spec.k;
    const int t = spec.t;
    switch (spec.kind) {
        case FamilyKind::JPM:
            return predict_jpm(spec);
        case FamilyKind::J:
            if (k == 3 && t == 1 && n >= 4) {
                return make(spec, nagy_alpha(n), "J(n,3,1) by n mod 4", ValidityKind::Proven, 4);
            }
            if (t == k - 1 && n > k && steiner_divisible(n, k)) {
                return make(spec, binomial(n, k - 1) / static_cast<std::uint64_t>(k),
                            "Steiner (n,k,k-1)-system", ValidityKind::Asymptotic, k + 1, std::nullopt,
                            "Steiner system exists for n > n0(k) under divisibility");
            }
            return std::nullopt;
        case FamilyKind::KPM:
            if (t >= 0) {
                return make(spec, binomial(n - t - 1, k - t - 1), "signed Kneser, t >= 0",
                            ValidityKind::Asymptotic, k + 1, std::nullopt, "holds for n > n0(k)");
            }
            if ((-t) % 2 == 1) {
                return make(spec, checked_mul(kleitman_S(k, -t - 1), binomial(n, k)),
                            "signed Kneser, odd negative t", ValidityKind::Asymptotic, k + 1, std::nullopt,
                            "holds for n > n0(k)");
            }
            return std::nullopt;
        case FamilyKind::JKL: {
            const int l = spec.l;
            if (l == 1 && t == -2 && n >= 2 * k) {
                if (n <= k * k) {
                    return make(spec, checked_mul(static_cast<std::uint64_t>(k), binomial(n - 1, k)),
                                "JKL(n,k,1,-2) = k C(n-1,k)", ValidityKind::Proven, 2 * k, k * k);
                }
                std::uint64_t value = checked_mul(static_cast<std::uint64_t>(k), binomial(k * k - 1, k));
                for (int i = k * k; i <= n - 1; ++i) value = checked_add(value, binomial(i, k));
                return make(spec, value, "JKL(n,k,1,-2) above k^2", ValidityKind::Proven, k * k + 1);
            }
            if (l >= 1 && t == -2 * l && n >= 2 * k && n <= 3 * k - l) {
                const std::uint64_t scaled = checked_mul(vertex_count(spec), static_cast<std::uint64_t>(k));
                if (scaled % static_cast<std::uint64_t>(n) == 0) {
                    return make(spec, scaled / static_cast<std::uint64_t>(n), "JKL(n,k,l,-2l) = k|V|/n",
                                ValidityKind::Proven, 2 * k, 3 * k - l);
                }
            }
            return std::nullopt;
        }
        case FamilyKind::JParity:
            if (auto v = parity_family_alpha(n, k, spec.parity)) {
                return make(spec, *v, "uniform families with parity-restricted intersections",
                            ValidityKind::Asymptotic, k + 1, std::nullopt, "holds for n > n0(k)");
            }
            return std::nullopt;
        case FamilyKind::JPMParity:
            if (auto v = parity_family_alpha(n, k, spec.parity)) {
                return make(spec, checked_mul(pow2(k), *v), "2^k times the unsigned parity family",
                            ValidityKind::Asymptotic, k + 1, std::nullopt, "holds for n > n0(k)");
            }
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::uint64_t kleitman_S(int n, int D) {
    if (n < 0 || D < 0) throw Error(ErrorCode::InvalidParams, "kleitman_S needs n, D >= 0");
    if (D >= n) return pow2(n);
    const int d = D / 2;
    std::uint64_t sum = 0;
    for (int j = 0; j <= d; ++j) sum = checked_add(sum, binomial(n, j));
    if (D % 2 == 1) sum = checked_add(sum, binomial(n - 1, d));
    return sum;
}

int residue_correction(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return 0;
        case 1: return 1;
        default: return 2;
    }
}

std::uint64_t nagy_alpha(int n) {
    if (n < 4) throw Error(ErrorCode::InvalidParams, "nagy_alpha needs n >= 4");
    switch (n % 4) {
        case 0: return static_cast<std::uint64_t>(n);
        case 1: return static_cast<std::uint64_t>(n - 1);
        default: return static_cast<std::uint64_t>(n - 2);
    }
}

std::uint64_t katona_upper_bound(std::uint64_t vG, std::uint64_t vH, std::uint64_t alphaH) {
    if (vH == 0 || vH > vG || alphaH > vH) {
        throw Error(ErrorCode::InvalidParams, "katona bound needs 0 < |H| <= |G| and alpha(H) <= |H|");
    }
    const unsigned __int128 scaled = static_cast<unsigned __int128>(vG) * alphaH;
    return static_cast<std::uint64_t>(scaled / vH);
}

const char* to_string(ValidityKind kind) noexcept {
    switch (kind) {
        case ValidityKind::Proven: return "proven";
        case ValidityKind::Asymptotic: return "asymptotic";
        case ValidityKind::Conjectured: return "conjectured";
    }
    return "?";
}

std::optional<PredictedAlpha> predicted_alpha(const GraphSpec& spec) {
    spec.validate();
    auto p = predict(spec);
    if (p && !p->validity.covers(spec.n)) return std::nullopt;
    return p;
}

std::uint64_t kpm_even_t_value(int n, int k, int t, std::uint64_t alpha_jkl) {
    if (t >= 0 || (-t) % 2 != 0) throw Error(ErrorCode::InvalidParams, "t must be even and negative");
    return checked_add(alpha_jkl, checked_mul(kleitman_S(k, -t - 2), binomial(n, k)));
}

Ratio Ratio::reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

bool RatioSequence::non_increasing() const noexcept {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1].ratio < rows[i].ratio) return false;
    }
    return true;
}

RatioSequence ratio_sequence(int k, int t, int n_from, int n_to, const SolveBudget& budget) {
    RatioSequence seq;
    for (int n = n_from; n <= n_to; ++n) {
        const GraphSpec spec = GraphSpec::jpm(n, k, t);
        const DistanceGraph g = build_graph(spec);
        const IndependenceCertificate cert = solve_exact(g, budget);
        if (!cert.optimal) {
            seq.complete = false;
            seq.stopped_at = n;
            break;
        }
        seq.rows.push_back({n, cert.alpha, g.order(), Ratio::reduced(cert.alpha, g.order())});
    }
    return seq;
}

}  // namespace jpm
