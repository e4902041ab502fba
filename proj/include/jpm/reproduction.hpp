#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "jpm/families.hpp"
#include "jpm/solver.hpp"

namespace jpm {

enum class CheckKind {
    Alpha,          // exact alpha of spec
    FanoVertices,   // order of the Fano-supported subgraph of spec
    FanoAlpha,      // alpha of the Fano-supported subgraph of spec
    FanoAveraging,  // averaging bound from the Fano subgraph, against the predicted alpha
    Sandwich,       // exact alpha, bracketed by the Kleitman construction and a counting bound
    PairBlocks,     // verified size of the pair-block construction for spec.n
    AlphaAtLeast,   // exact alpha compared against a lower bound
};

enum class RowStatus { Pass, Fail, Skipped };

const char* to_string(RowStatus status) noexcept;

/// One entry of the reproduction matrix. expected == 0 means "take the
/// closed-form prediction for spec".
struct CheckEntry {
    std::string label;
    std::string group;
    CheckKind kind;
    GraphSpec spec;
    std::uint64_t expected;
};

struct PaperCheckRow {
    std::string label;
    std::string group;
    GraphSpec spec;
    std::uint64_t expected = 0;
    std::uint64_t computed = 0;
    RowStatus status = RowStatus::Skipped;
    std::string reason;
    std::chrono::milliseconds elapsed{0};
};

/// The full reproduction matrix, in execution order.
const std::vector<CheckEntry>& reproduction_table();

/// Runs one entry. Rows whose search exceeds the budget are Skipped.
PaperCheckRow run_check(const CheckEntry& entry, const SolveBudget& budget);

/// CSV line `label,expected,computed,status,millis`.
std::string csv_line(const PaperCheckRow& row);

}  // namespace jpm
