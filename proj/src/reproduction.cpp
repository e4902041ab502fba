#include "jpm/reproduction.hpp"

#include <array>

#include "jpm/bounds.hpp"
#include "jpm/constructions.hpp"
#include "jpm/error.hpp"
#include "jpm/rs_hypergraph.hpp"

namespace jpm {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<CheckEntry> make_table() {
    std::vector<CheckEntry> rows;
    auto alpha = [&](const std::string& group, const GraphSpec& spec, std::uint64_t expected) {
        rows.push_back({spec.label(), group, CheckKind::Alpha, spec, expected});
    };

    const std::array<std::uint64_t, 6> k2_minus{4, 4, 8, 10, 15, 21};
    for (int n = 2; n <= 7; ++n) alpha("k2", GraphSpec::jpm(n, 2, -1), k2_minus[static_cast<std::size_t>(n - 2)]);
    const std::array<std::uint64_t, 7> k2_zero{2, 6, 6, 8, 10, 12, 14};
    for (int n = 2; n <= 8; ++n) alpha("k2", GraphSpec::jpm(n, 2, 0), k2_zero[static_cast<std::size_t>(n - 2)]);
    for (int n = 4; n <= 8; ++n) {
        alpha("k2", GraphSpec::jpm(n, 2, 1), n % 2 == 0 ? 2 * static_cast<std::uint64_t>(n)
                                                         : 2 * static_cast<std::uint64_t>(n - 1));
    }

    const std::array<std::uint64_t, 5> k3_minus{2, 8, 14, 21, 35};
    for (int n = 3; n <= 7; ++n) alpha("k3-t-1", GraphSpec::jpm(n, 3, -1), k3_minus[static_cast<std::size_t>(n - 3)]);

    const std::array<std::uint64_t, 7> k3_zero{8, 8, 20, 32, 56, 56, 56};
    for (int n = 3; n <= 9; ++n) alpha("k3-t0", GraphSpec::jpm(n, 3, 0), k3_zero[static_cast<std::size_t>(n - 3)]);

    const GraphSpec fano_host = GraphSpec::jpm(7, 3, -1);
    rows.push_back({"fano-subgraph-order", "fano", CheckKind::FanoVertices, fano_host, 56});
    rows.push_back({"fano-subgraph-alpha", "fano", CheckKind::FanoAlpha, fano_host, 7});
    for (int n = 7; n <= 10; ++n) {
        rows.push_back({"fano-averaging " + GraphSpec::jpm(n, 3, -1).label(), "fano", CheckKind::FanoAveraging,
                        GraphSpec::jpm(n, 3, -1), binomial(n, 3)});
    }

    for (int n = 4; n <= 12; ++n) alpha("nagy", GraphSpec::j(n, 3, 1), 0);
    for (int n = 4; n <= 8; ++n) alpha("k3-t1", GraphSpec::jpm(n, 3, 1), 0);
    alpha("jkl", GraphSpec::jkl(4, 2, 1, -2), 0);

    // Exact values computed by this solver and cross-checked with an
    // unrelated exact clique code; frozen for regression.
    const std::array<std::uint64_t, 3> k3_minus2{12, 24, 42};
    for (int n = 4; n <= 6; ++n) {
        rows.push_back({"sandwich " + GraphSpec::jpm(n, 3, -2).label(), "k3-t-2", CheckKind::Sandwich,
                        GraphSpec::jpm(n, 3, -2), k3_minus2[static_cast<std::size_t>(n - 4)]});
    }

    for (int n : {4, 6, 8}) {
        rows.push_back({"pair-blocks n=" + std::to_string(n), "pair-blocks", CheckKind::PairBlocks,
                        GraphSpec::jpm(n, 4, 1), 2 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 2)});
    }
    rows.push_back({"alpha>=pair-blocks " + GraphSpec::jpm(6, 4, 1).label(), "pair-blocks",
                    CheckKind::AlphaAtLeast, GraphSpec::jpm(6, 4, 1), 48});
    return rows;
}

DistanceGraph fano_subgraph(const GraphSpec& host) {
    const std::array<int, 7> places{1, 2, 3, 4, 5, 6, 7};
    return induced_on_supports(build_graph(host), fano_supports(places));
}

// Solves g; on budget exhaustion marks the row Skipped and returns false.
bool solve_into(PaperCheckRow& row, const DistanceGraph& g, const SolveBudget& budget, std::uint64_t& alpha) {
    const IndependenceCertificate cert = solve_exact(g, budget);
    if (cert.status == CertificateStatus::Failed) {
        row.status = RowStatus::Fail;
        row.reason = "solver witness failed verification";
        return false;
    }
    if (!cert.optimal) {
        row.status = RowStatus::Skipped;
        row.reason = "budget exceeded (best found " + std::to_string(cert.alpha) + ")";
        row.computed = cert.alpha;
        return false;
    }
    alpha = cert.alpha;
    return true;
}

void settle_equal(PaperCheckRow& row) {
    row.status = row.expected == row.computed ? RowStatus::Pass : RowStatus::Fail;
}

void run_into(PaperCheckRow& row, const CheckEntry& entry, const SolveBudget& budget) {
    const GraphSpec& spec = entry.spec;
    switch (entry.kind) {
        case CheckKind::Alpha: {
            if (row.expected == 0) {
                const auto predicted = predicted_alpha(spec);
                if (!predicted) {
                    row.status = RowStatus::Fail;
                    row.reason = "no closed-form prediction";
                    return;
                }
                row.expected = predicted->value;
            }
            if (solve_into(row, build_graph(spec), budget, row.computed)) settle_equal(row);
            return;
        }
        case CheckKind::FanoVertices:
            row.computed = fano_subgraph(spec).order();
            settle_equal(row);
            return;
        case CheckKind::FanoAlpha:
            if (solve_into(row, fano_subgraph(spec), budget, row.computed)) settle_equal(row);
            return;
        case CheckKind::FanoAveraging: {
            const DistanceGraph sub = fano_subgraph(GraphSpec::jpm(7, 3, -1));
            std::uint64_t sub_alpha = 0;
            if (!solve_into(row, sub, budget, sub_alpha)) return;
            row.computed = katona_upper_bound(vertex_count(spec), sub.order(), sub_alpha);
            settle_equal(row);
            const auto predicted = predicted_alpha(spec);
            if (row.status == RowStatus::Pass && (!predicted || predicted->value != row.computed)) {
                row.status = RowStatus::Fail;
                row.reason = "averaging bound disagrees with the predicted alpha";
            }
            return;
        }
        case CheckKind::Sandwich: {
            if (!solve_into(row, build_graph(spec), budget, row.computed)) return;
            settle_equal(row);
            const auto lower = construct_kleitman_family(spec.n, spec.k, spec.t, KleitmanVariant::Auto, budget);
            // 2 C(n,3) + (8/3) C(n,2), claimed for n >= 6.
            const std::uint64_t upper = 2 * binomial(spec.n, 3) + 8 * binomial(spec.n, 2) / 3;
            row.reason = "construction " + std::to_string(lower.size);
            if (spec.n >= 6) row.reason += ", upper bound " + std::to_string(upper);
            if (!lower.verified || lower.size > row.computed || (spec.n >= 6 && row.computed > upper)) {
                row.status = RowStatus::Fail;
                row.reason += " (sandwich violated)";
            }
            return;
        }
        case CheckKind::PairBlocks: {
            const auto report = construct_pair_blocks(spec.n);
            row.computed = report.verified ? report.size : 0;
            settle_equal(row);
            if (!report.verified) row.reason = "construction not independent";
            return;
        }
        case CheckKind::AlphaAtLeast:
            if (!solve_into(row, build_graph(spec), budget, row.computed)) return;
            row.status = row.computed >= row.expected ? RowStatus::Pass : RowStatus::Fail;
            row.reason = "lower bound check";
            return;
    }
}

}  // namespace

const char* to_string(RowStatus status) noexcept {
    switch (status) {
        case RowStatus::Pass: return "Pass";
        case RowStatus::Fail: return "Fail";
        case RowStatus::Skipped: return "Skipped";
    }
    return "?";
}

const std::vector<CheckEntry>& reproduction_table() {
    static const std::vector<CheckEntry> table = make_table();
    return table;
}

PaperCheckRow run_check(const CheckEntry& entry, const SolveBudget& budget) {
    PaperCheckRow row;
    row.label = entry.label;
    row.group = entry.group;
    row.spec = entry.spec;
    row.expected = entry.expected;
    const auto start = Clock::now();
    try {
        run_into(row, entry, budget);
    } catch (const Error& e) {
        row.status = RowStatus::Fail;
        row.reason = e.what();
    }
    row.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return row;
}

std::string csv_line(const PaperCheckRow& row) {
    // Labels contain commas, so they are always quoted.
    return "\"" + row.label + "\"," + std::to_string(row.expected) + "," + std::to_string(row.computed) + "," +
           to_string(row.status) + "," + std::to_string(row.elapsed.count());
}

}  // namespace jpm
