#include "jpm/jpm.h"

#include <cstring>
#include <iostream>
#include <new>
#include <sstream>
#include <string>

#include "jpm/bounds.hpp"
#include "jpm/constructions.hpp"
#include "jpm/error.hpp"
#include "jpm/io.hpp"
#include "jpm/reproduction.hpp"
#include "jpm/rs_hypergraph.hpp"
#include "jpm/solver.hpp"

struct jpm_graph {
    jpm::DistanceGraph graph;
};

struct jpm_certificate {
    jpm::IndependenceCertificate cert;
};

namespace {

std::string& last_error() {
    thread_local std::string message;
    return message;
}

jpm_status fail(jpm_status status, const std::string& message) {
    last_error() = message;
    return status;
}

jpm_status map_code(jpm::ErrorCode code) {
    using jpm::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidSpec: return JPM_ERR_INVALID_SPEC;
        case ErrorCode::TooLarge: return JPM_ERR_TOO_LARGE;
        case ErrorCode::DimensionMismatch: return JPM_ERR_DIMENSION_MISMATCH;
        case ErrorCode::UnknownVertex: return JPM_ERR_UNKNOWN_VERTEX;
        case ErrorCode::BadSupport: return JPM_ERR_BAD_SUPPORT;
        case ErrorCode::InvalidParams: return JPM_ERR_INVALID_PARAMS;
        case ErrorCode::WitnessNotIndependent: return JPM_ERR_WITNESS_NOT_INDEPENDENT;
        case ErrorCode::NotPrime: return JPM_ERR_NOT_PRIME;
        case ErrorCode::PTooSmall: return JPM_ERR_P_TOO_SMALL;
        case ErrorCode::NoPrimeInWindow: return JPM_ERR_NO_PRIME_IN_WINDOW;
        case ErrorCode::MapNotInjective: return JPM_ERR_MAP_NOT_INJECTIVE;
        case ErrorCode::BadPlaces: return JPM_ERR_BAD_PLACES;
        case ErrorCode::Overflow: return JPM_ERR_OVERFLOW;
        case ErrorCode::Parse: return JPM_ERR_PARSE;
        case ErrorCode::Io: return JPM_ERR_IO;
    }
    return JPM_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
jpm_status guarded(Body&& body) noexcept {
    try {
        last_error().clear();
        return body();
    } catch (const jpm::Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(JPM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(JPM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(JPM_ERR_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

jpm::GraphSpec to_spec(const jpm_spec& s) {
    jpm::GraphSpec spec;
    switch (s.kind) {
        case JPM_FAMILY_JPM: spec.kind = jpm::FamilyKind::JPM; break;
        case JPM_FAMILY_J: spec.kind = jpm::FamilyKind::J; break;
        case JPM_FAMILY_KPM: spec.kind = jpm::FamilyKind::KPM; break;
        case JPM_FAMILY_JKL: spec.kind = jpm::FamilyKind::JKL; break;
        case JPM_FAMILY_JPARITY: spec.kind = jpm::FamilyKind::JParity; break;
        case JPM_FAMILY_JPMPARITY: spec.kind = jpm::FamilyKind::JPMParity; break;
        default: throw jpm::Error(jpm::ErrorCode::InvalidSpec, "unknown family kind");
    }
    spec.n = s.n;
    spec.k = s.k;
    spec.t = s.t;
    spec.l = s.l;
    spec.parity = s.parity == JPM_PARITY_ODD ? jpm::Parity::Odd : jpm::Parity::Even;
    spec.validate();
    return spec;
}

jpm::SolveBudget to_budget(const jpm_budget* b) {
    jpm::SolveBudget budget;
    if (b != nullptr) {
        budget.time_limit = std::chrono::milliseconds(b->time_limit_ms);
        budget.node_limit = b->node_limit;
        budget.threads = b->threads;
    }
    budget.validate();
    return budget;
}

std::vector<jpm::PlaceSet> parse_supports(const std::string& text) {
    std::vector<jpm::PlaceSet> out;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, ';')) {
        if (block.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<int> places;
        std::stringstream items(block);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                std::size_t used = 0;
                places.push_back(std::stoi(item, &used));
                if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw jpm::Error(jpm::ErrorCode::Parse, "bad place '" + item + "' in support list");
            }
        }
        out.push_back(jpm::make_place_set(places));
    }
    return out;
}

template <typename T>
void require(const T* ptr, const char* what) {
    if (ptr == nullptr) throw jpm::Error(jpm::ErrorCode::InvalidParams, std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

const char* jpm_last_error(void) { return last_error().c_str(); }

const char* jpm_status_name(jpm_status status) {
    switch (status) {
        case JPM_OK: return "ok";
        case JPM_ERR_INVALID_SPEC: return "InvalidSpec";
        case JPM_ERR_TOO_LARGE: return "TooLarge";
        case JPM_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
        case JPM_ERR_UNKNOWN_VERTEX: return "UnknownVertex";
        case JPM_ERR_BAD_SUPPORT: return "BadSupport";
        case JPM_ERR_INVALID_PARAMS: return "InvalidParams";
        case JPM_ERR_WITNESS_NOT_INDEPENDENT: return "WitnessNotIndependent";
        case JPM_ERR_NOT_PRIME: return "NotPrime";
        case JPM_ERR_P_TOO_SMALL: return "PTooSmall";
        case JPM_ERR_NO_PRIME_IN_WINDOW: return "NoPrimeInWindow";
        case JPM_ERR_MAP_NOT_INJECTIVE: return "MapNotInjective";
        case JPM_ERR_BAD_PLACES: return "BadPlaces";
        case JPM_ERR_OVERFLOW: return "Overflow";
        case JPM_ERR_PARSE: return "Parse";
        case JPM_ERR_IO: return "Io";
        case JPM_ERR_NOT_INDEPENDENT: return "NotIndependent";
        case JPM_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
        case JPM_ERR_NULL_ARGUMENT: return "NullArgument";
        case JPM_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

void jpm_string_free(char* text) { std::free(text); }

void jpm_budget_init(jpm_budget* budget) {
    if (budget == nullptr) return;
    const jpm::SolveBudget defaults;
    budget->time_limit_ms = static_cast<uint64_t>(defaults.time_limit.count());
    budget->node_limit = defaults.node_limit;
    budget->threads = defaults.threads;
}

jpm_status jpm_family_from_name(const char* name, jpm_family* out) {
    return guarded([&] {
        if (name == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const auto kind = jpm::parse_family_kind(name);
        if (!kind) return fail(JPM_ERR_INVALID_SPEC, std::string("unknown family '") + name + "'");
        *out = static_cast<jpm_family>(static_cast<int>(*kind));
        return JPM_OK;
    });
}

jpm_status jpm_spec_validate(const jpm_spec* spec) {
    return guarded([&] {
        if (spec == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "spec is NULL");
        to_spec(*spec);
        return JPM_OK;
    });
}

jpm_status jpm_spec_vertex_count(const jpm_spec* spec, uint64_t* out) {
    return guarded([&] {
        if (spec == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        *out = jpm::vertex_count(to_spec(*spec));
        return JPM_OK;
    });
}

jpm_status jpm_graph_build(const jpm_spec* spec, uint64_t vertex_cap, jpm_graph** out) {
    return guarded([&] {
        if (spec == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const std::size_t cap = vertex_cap == 0 ? jpm::kDefaultVertexCap : static_cast<std::size_t>(vertex_cap);
        *out = new jpm_graph{jpm::build_graph(to_spec(*spec), cap)};
        return JPM_OK;
    });
}

jpm_status jpm_graph_read(const char* path, jpm_graph_format format, jpm_graph** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const std::string text = jpm::read_file(path);
        if (format == JPM_FORMAT_DIMACS) {
            std::istringstream in(text);
            *out = new jpm_graph{jpm::read_dimacs(in)};
        } else {
            *out = new jpm_graph{jpm::graph_from_json(jpm::parse_json_text(text))};
        }
        return JPM_OK;
    });
}

jpm_status jpm_graph_write(const jpm_graph* graph, const char* path, jpm_graph_format format) {
    return guarded([&] {
        if (graph == nullptr || path == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        std::ostringstream out;
        if (format == JPM_FORMAT_DIMACS) {
            jpm::write_dimacs(out, graph->graph);
        } else {
            out << jpm::graph_to_json(graph->graph).dump() << "\n";
        }
        if (std::string(path) == "-") {
            std::cout << out.str() << std::flush;
        } else {
            jpm::write_file(path, out.str());
        }
        return JPM_OK;
    });
}

size_t jpm_graph_order(const jpm_graph* graph) { return graph == nullptr ? 0 : graph->graph.order(); }

size_t jpm_graph_edge_count(const jpm_graph* graph) { return graph == nullptr ? 0 : graph->graph.edge_count(); }

jpm_status jpm_graph_vertex_label(const jpm_graph* graph, size_t index, char** out) {
    return guarded([&] {
        if (graph == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        if (index >= graph->graph.order()) return fail(JPM_ERR_UNKNOWN_VERTEX, "vertex index out of range");
        *out = duplicate(graph->graph.vertex_label(index));
        return JPM_OK;
    });
}

jpm_status jpm_graph_fano_subgraph(const jpm_graph* graph, const int* places, jpm_graph** out) {
    return guarded([&] {
        if (graph == nullptr || places == nullptr || out == nullptr) {
            return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        }
        const auto supports = jpm::fano_supports(std::span<const int>(places, 7));
        *out = new jpm_graph{jpm::induced_on_supports(graph->graph, supports)};
        return JPM_OK;
    });
}

void jpm_graph_free(jpm_graph* graph) { delete graph; }

jpm_status jpm_solve_exact(const jpm_graph* graph, const jpm_budget* budget, jpm_certificate** out) {
    return guarded([&] {
        if (graph == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        auto* cert = new jpm_certificate{jpm::solve_exact(graph->graph, to_budget(budget))};
        *out = cert;
        if (!cert->cert.optimal) {
            return fail(JPM_ERR_BUDGET_EXCEEDED, "search budget exhausted before proving optimality");
        }
        return JPM_OK;
    });
}

jpm_status jpm_greedy_lower_bound(const jpm_graph* graph, uint64_t seed, jpm_certificate** out) {
    return guarded([&] {
        if (graph == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        *out = new jpm_certificate{jpm::greedy_lower_bound(graph->graph, seed)};
        return JPM_OK;
    });
}

size_t jpm_certificate_alpha(const jpm_certificate* cert) { return cert == nullptr ? 0 : cert->cert.alpha; }

int jpm_certificate_verified(const jpm_certificate* cert) {
    return cert != nullptr && cert->cert.status == jpm::CertificateStatus::Verified;
}

int jpm_certificate_optimal(const jpm_certificate* cert) { return cert != nullptr && cert->cert.optimal; }

jpm_status jpm_certificate_json(const jpm_certificate* cert, char** out) {
    return guarded([&] {
        if (cert == nullptr || out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        *out = duplicate(jpm::certificate_to_json(cert->cert).dump());
        return JPM_OK;
    });
}

void jpm_certificate_free(jpm_certificate* cert) { delete cert; }

jpm_status jpm_verify_certificate(const char* json_text, char** first, char** second) {
    return guarded([&] {
        if (json_text == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "certificate text is NULL");
        const auto cert = jpm::certificate_from_json(jpm::parse_json_text(json_text));
        if (!cert.spec) return fail(JPM_ERR_PARSE, "certificate has no spec to rebuild the graph from");
        const auto graph = jpm::build_graph(*cert.spec);
        const auto result = jpm::verify_independent(graph, std::span<const std::string>(cert.witness));
        if (result.ok()) return JPM_OK;
        if (first != nullptr) *first = duplicate(graph.vertex_label(result.violation->first));
        if (second != nullptr) *second = duplicate(graph.vertex_label(result.violation->second));
        return fail(JPM_ERR_NOT_INDEPENDENT, "witness contains an adjacent pair");
    });
}

jpm_status jpm_construct(const char* name, const jpm_construct_params* params, const jpm_budget* budget,
                         char** report_json) {
    return guarded([&] {
        if (name == nullptr || params == nullptr || report_json == nullptr) {
            return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        }
        const std::string which = name;
        const jpm::SolveBudget solve_budget = to_budget(budget);
        const bool given = params->supports != nullptr;
        jpm::ConstructionReport report;
        if (which == "tail-signs") {
            report = jpm::construct_tail_signs(params->n, params->k, params->t);
        } else if (which == "kleitman") {
            const auto variant = static_cast<jpm::KleitmanVariant>(static_cast<int>(params->variant));
            report = jpm::construct_kleitman_family(params->n, params->k, params->t, variant, solve_budget);
        } else if (which == "double-sign") {
            if (params->t <= 0 || params->t >= params->k) {
                return fail(JPM_ERR_INVALID_PARAMS, "double-sign needs 0 < t < k");
            }
            const auto supports = given ? parse_supports(params->supports)
                                        : jpm::support_witness(jpm::GraphSpec::j(params->n, params->k, params->t),
                                                               solve_budget);
            report = jpm::construct_double_sign(params->n, params->k, params->t, supports);
        } else if (which == "full-sign-lift") {
            const jpm::GraphSpec spec = to_spec(params->lift_spec);
            std::vector<jpm::PlaceSet> supports;
            if (given) {
                supports = parse_supports(params->supports);
            } else if (spec.kind == jpm::FamilyKind::JPMParity) {
                supports = jpm::support_witness(jpm::GraphSpec::jparity(spec.n, spec.k, spec.parity), solve_budget);
            } else if (spec.kind == jpm::FamilyKind::JPM && spec.t >= 0) {
                supports = jpm::support_witness(jpm::GraphSpec::j(spec.n, spec.k, spec.t), solve_budget);
            } else {
                return fail(JPM_ERR_INVALID_PARAMS,
                            "supports are required unless the target is jpm with t >= 0 or jpmparity");
            }
            report = jpm::construct_full_sign_lift(spec, supports);
        } else if (which == "pair-blocks") {
            report = jpm::construct_pair_blocks(params->n);
        } else {
            return fail(JPM_ERR_INVALID_PARAMS, "unknown construction '" + which + "'");
        }
        *report_json = duplicate(jpm::report_to_json(report).dump());
        if (!report.verified) return fail(JPM_ERR_NOT_INDEPENDENT, "construction failed verification");
        return JPM_OK;
    });
}

jpm_status jpm_kleitman_S(int n, int diameter, uint64_t* out) {
    return guarded([&] {
        if (out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        *out = jpm::kleitman_S(n, diameter);
        return JPM_OK;
    });
}

jpm_status jpm_nagy_alpha(int n, uint64_t* out) {
    return guarded([&] {
        if (out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        *out = jpm::nagy_alpha(n);
        return JPM_OK;
    });
}

jpm_status jpm_katona_upper_bound(uint64_t vG, uint64_t vH, uint64_t alphaH, uint64_t* out) {
    return guarded([&] {
        if (out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        *out = jpm::katona_upper_bound(vG, vH, alphaH);
        return JPM_OK;
    });
}

jpm_status jpm_predicted_alpha(const jpm_spec* spec, char** json) {
    return guarded([&] {
        if (spec == nullptr || json == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const jpm::GraphSpec s = to_spec(*spec);
        const auto predicted = jpm::predicted_alpha(s);
        nlohmann::json out = nullptr;
        if (predicted) {
            out = {{"spec", jpm::spec_to_json(s)},
                   {"value", predicted->value},
                   {"source", predicted->source},
                   {"validity", jpm::to_string(predicted->validity.kind)},
                   {"n_min", predicted->validity.n_min},
                   {"n_max", predicted->validity.n_max ? nlohmann::json(*predicted->validity.n_max) : nlohmann::json(nullptr)},
                   {"note", predicted->validity.note}};
        }
        *json = duplicate(out.dump());
        return JPM_OK;
    });
}

jpm_status jpm_ratio_sequence(int k, int t, int n_from, int n_to, const jpm_budget* budget, char** json) {
    return guarded([&] {
        if (json == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const auto seq = jpm::ratio_sequence(k, t, n_from, n_to, to_budget(budget));
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : seq.rows) {
            rows.push_back({{"n", r.n}, {"alpha", r.alpha}, {"vertices", r.vertices},
                            {"num", r.ratio.num}, {"den", r.ratio.den}});
        }
        nlohmann::json out = {{"k", k}, {"t", t}, {"rows", rows}, {"complete", seq.complete},
                              {"non_increasing", seq.non_increasing()}};
        if (seq.stopped_at) out["stopped_at"] = *seq.stopped_at;
        *json = duplicate(out.dump());
        return seq.complete ? JPM_OK : fail(JPM_ERR_BUDGET_EXCEEDED, "ratio sequence stopped on budget");
    });
}

jpm_status jpm_rs_hypergraph(uint32_t p, int k, int b, char** json) {
    return guarded([&] {
        if (json == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const auto h = jpm::rs_construct(p, k, b);
        auto out = jpm::hypergraph_to_json(h);
        out["b_simple"] = jpm::verify_b_simple(h).ok();
        const auto codegree = jpm::codegree_range(h, b);
        out["codegree"] = {{"min", codegree.min}, {"max", codegree.max}};
        *json = duplicate(out.dump());
        return JPM_OK;
    });
}

jpm_status jpm_choose_prime(int n, int k, uint32_t* p, int* exceeds_power_of_two) {
    return guarded([&] {
        if (p == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const auto choice = jpm::choose_prime(n, k);
        *p = choice.p;
        if (exceeds_power_of_two != nullptr) *exceeds_power_of_two = choice.exceeds_power_of_two;
        return JPM_OK;
    });
}

size_t jpm_repro_count(void) { return jpm::reproduction_table().size(); }

jpm_status jpm_repro_describe(size_t index, const char** label, const char** group) {
    return guarded([&] {
        const auto& table = jpm::reproduction_table();
        if (index >= table.size()) return fail(JPM_ERR_INVALID_PARAMS, "row index out of range");
        if (label != nullptr) *label = table[index].label.c_str();
        if (group != nullptr) *group = table[index].group.c_str();
        return JPM_OK;
    });
}

jpm_status jpm_repro_run(size_t index, const jpm_budget* budget, jpm_check_result* out) {
    return guarded([&] {
        if (out == nullptr) return fail(JPM_ERR_NULL_ARGUMENT, "NULL argument");
        const auto& table = jpm::reproduction_table();
        if (index >= table.size()) return fail(JPM_ERR_INVALID_PARAMS, "row index out of range");
        const auto row = jpm::run_check(table[index], to_budget(budget));
        *out = jpm_check_result{};
        out->status = row.status == jpm::RowStatus::Pass   ? JPM_ROW_PASS
                      : row.status == jpm::RowStatus::Fail ? JPM_ROW_FAIL
                                                           : JPM_ROW_SKIPPED;
        out->expected = row.expected;
        out->computed = row.computed;
        out->millis = static_cast<uint64_t>(row.elapsed.count());
        std::strncpy(out->label, row.label.c_str(), sizeof(out->label) - 1);
        std::strncpy(out->group, row.group.c_str(), sizeof(out->group) - 1);
        std::strncpy(out->reason, row.reason.c_str(), sizeof(out->reason) - 1);
        return JPM_OK;
    });
}

}  // extern "C"
