// Command-line front end. Talks to the library only through jpm.h.
//
// stdout carries machine-readable output; diagnostics go to stderr.
// Exit codes: 0 ok, 1 error, 2 budget exceeded, 3 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jpm/jpm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitViolation = 3;

struct SpecFlags {
    std::string family = "jpm";
    int n = 0;
    int k = 0;
    int t = 0;
    int l = 0;
    std::string parity = "even";
};

struct BudgetFlags {
    double time_limit = 0;  // seconds; 0 keeps the default
    std::uint64_t node_limit = 0;
    unsigned threads = 1;
};

struct Owned {
    char* text = nullptr;
    ~Owned() { jpm_string_free(text); }
    std::string str() const { return text ? text : ""; }
};

using GraphPtr = std::unique_ptr<jpm_graph, decltype(&jpm_graph_free)>;
using CertPtr = std::unique_ptr<jpm_certificate, decltype(&jpm_certificate_free)>;

int report(jpm_status status) {
    std::cerr << "error: " << jpm_status_name(status) << ": " << jpm_last_error() << "\n";
    return kExitError;
}

void add_spec_flags(CLI::App* cmd, SpecFlags& s, bool required = true) {
    cmd->add_option("--family", s.family, "jpm, j, kpm, jkl, jparity or jpmparity");
    auto* n = cmd->add_option("-n,--n", s.n, "dimension");
    auto* k = cmd->add_option("-k,--k", s.k, "support size (number of +1 entries for jkl)");
    cmd->add_option("-t,--t", s.t, "scalar product (s for jkl); negative values as -t=-1 or --t -1");
    cmd->add_option("-l,--l", s.l, "number of -1 entries (jkl)");
    cmd->add_option("--parity", s.parity, "even or odd (parity families)")
        ->check(CLI::IsMember({"even", "odd"}));
    if (required) {
        n->required();
        k->required();
    }
}

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--time-limit", b.time_limit, "seconds per solve");
    cmd->add_option("--node-limit", b.node_limit, "search nodes per solve");
    cmd->add_option("--threads", b.threads, "solver threads");
}

jpm_budget make_budget(const BudgetFlags& b) {
    jpm_budget budget;
    jpm_budget_init(&budget);
    if (b.time_limit > 0) budget.time_limit_ms = static_cast<std::uint64_t>(b.time_limit * 1000.0);
    if (b.node_limit > 0) budget.node_limit = b.node_limit;
    budget.threads = b.threads;
    return budget;
}

jpm_status make_spec(const SpecFlags& s, jpm_spec* out) {
    jpm_family family;
    if (jpm_status st = jpm_family_from_name(s.family.c_str(), &family); st != JPM_OK) return st;
    *out = jpm_spec{family, s.n, s.k, s.t, s.l, s.parity == "odd" ? JPM_PARITY_ODD : JPM_PARITY_EVEN};
    return jpm_spec_validate(out);
}

jpm_graph_format parse_format(const std::string& name) {
    return name == "json" ? JPM_FORMAT_JSON : JPM_FORMAT_DIMACS;
}

// CLI11 reads "-t=-1" as the value "=-1"; rewrite single-letter "-x=v" to "--x=v".
std::vector<std::string> normalise_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        std::string a = argv[i];
        if (a.size() > 3 && a[0] == '-' && a[1] != '-' && a[2] == '=') a = "-" + a;
        args.push_back(a);
    }
    return args;  // reversed, as CLI11::App::parse(vector) expects
}

int cmd_gen(const SpecFlags& s, const std::string& out, const std::string& format, std::uint64_t cap) {
    jpm_spec spec;
    if (jpm_status st = make_spec(s, &spec); st != JPM_OK) return report(st);
    jpm_graph* raw = nullptr;
    if (jpm_status st = jpm_graph_build(&spec, cap, &raw); st != JPM_OK) return report(st);
    GraphPtr g(raw, jpm_graph_free);
    if (jpm_status st = jpm_graph_write(g.get(), out.c_str(), parse_format(format)); st != JPM_OK) return report(st);
    std::cerr << "wrote " << jpm_graph_order(g.get()) << " vertices, " << jpm_graph_edge_count(g.get())
              << " edges\n";
    return kExitOk;
}

int cmd_alpha(const SpecFlags& s, const std::string& dimacs, const std::string& graph_json,
              const BudgetFlags& b, bool greedy, std::uint64_t seed) {
    jpm_graph* raw = nullptr;
    jpm_status st;
    if (!dimacs.empty()) {
        st = jpm_graph_read(dimacs.c_str(), JPM_FORMAT_DIMACS, &raw);
    } else if (!graph_json.empty()) {
        st = jpm_graph_read(graph_json.c_str(), JPM_FORMAT_JSON, &raw);
    } else {
        jpm_spec spec;
        st = make_spec(s, &spec);
        if (st == JPM_OK) st = jpm_graph_build(&spec, 0, &raw);
    }
    if (st != JPM_OK) return report(st);
    GraphPtr g(raw, jpm_graph_free);

    jpm_certificate* cert_raw = nullptr;
    const jpm_budget budget = make_budget(b);
    st = greedy ? jpm_greedy_lower_bound(g.get(), seed, &cert_raw) : jpm_solve_exact(g.get(), &budget, &cert_raw);
    if (st != JPM_OK && st != JPM_ERR_BUDGET_EXCEEDED) return report(st);
    CertPtr cert(cert_raw, jpm_certificate_free);
    Owned json;
    if (jpm_status js = jpm_certificate_json(cert.get(), &json.text); js != JPM_OK) return report(js);
    std::cout << json.str() << "\n";
    if (st == JPM_ERR_BUDGET_EXCEEDED) {
        std::cerr << "budget exceeded: alpha >= " << jpm_certificate_alpha(cert.get()) << " (not proven optimal)\n";
        return kExitBudget;
    }
    return jpm_certificate_verified(cert.get()) ? kExitOk : kExitViolation;
}

int cmd_reproduce(const std::vector<std::string>& groups, const BudgetFlags& b, bool extended,
                    const std::string& csv_path, bool list) {
    BudgetFlags flags = b;
    if (flags.time_limit <= 0) flags.time_limit = extended ? 6 * 3600.0 : 600.0;
    const jpm_budget budget = make_budget(flags);

    std::optional<std::ofstream> csv;
    if (!csv_path.empty()) {
        csv.emplace(csv_path);
        if (!*csv) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return kExitError;
        }
        *csv << "label,expected,computed,status,millis\n";
    }
    std::cout << (list ? "group,label\n" : "label,expected,computed,status,millis\n");

    std::map<std::string, int> tally;
    for (std::size_t i = 0; i < jpm_repro_count(); ++i) {
        const char* label = nullptr;
        const char* group = nullptr;
        jpm_repro_describe(i, &label, &group);
        if (!groups.empty() && std::find(groups.begin(), groups.end(), group) == groups.end()) continue;
        if (list) {
            std::cout << group << "," << '"' << label << '"' << "\n";
            continue;
        }
        jpm_check_result row;
        if (jpm_status st = jpm_repro_run(i, &budget, &row); st != JPM_OK) return report(st);
        const char* status = row.status == JPM_ROW_PASS ? "Pass" : row.status == JPM_ROW_FAIL ? "Fail" : "Skipped";
        std::string line = std::string("\"") + row.label + "\"," + std::to_string(row.expected) + "," +
                           std::to_string(row.computed) + "," + status + "," + std::to_string(row.millis);
        std::cout << line << std::endl;
        if (csv) *csv << line << "\n";
        if (row.status != JPM_ROW_PASS && row.reason[0] != '\0') {
            std::cerr << row.label << ": " << row.reason << "\n";
        }
        ++tally[status];
    }
    if (!list) {
        std::cerr << "pass " << tally["Pass"] << ", fail " << tally["Fail"] << ", skipped " << tally["Skipped"]
                  << "\n";
    }
    return tally["Fail"] == 0 ? kExitOk : kExitViolation;
}

int cmd_construct(const std::string& name, const SpecFlags& s, const std::string& supports,
                  const std::string& variant, const BudgetFlags& b) {
    jpm_construct_params params{};
    params.n = s.n;
    params.k = s.k;
    params.t = s.t;
    params.supports = supports.empty() ? nullptr : supports.c_str();
    params.variant = variant == "per-support"   ? JPM_KLEITMAN_PER_SUPPORT
                     : variant == "jkl-block" ? JPM_KLEITMAN_WITH_JKL_BLOCK
                                              : JPM_KLEITMAN_AUTO;
    if (name == "full-sign-lift") {
        if (jpm_status st = make_spec(s, &params.lift_spec); st != JPM_OK) return report(st);
    }
    const jpm_budget budget = make_budget(b);
    Owned json;
    const jpm_status st = jpm_construct(name.c_str(), &params, &budget, &json.text);
    if (json.text != nullptr) std::cout << json.str() << "\n";
    if (st == JPM_ERR_NOT_INDEPENDENT) {
        std::cerr << "construction failed verification: " << jpm_last_error() << "\n";
        return kExitViolation;
    }
    return st == JPM_OK ? kExitOk : report(st);
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitError;
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Owned first;
    Owned second;
    const jpm_status st = jpm_verify_certificate(text.c_str(), &first.text, &second.text);
    if (st == JPM_OK) {
        std::cout << "{\"ok\":true}\n";
        return kExitOk;
    }
    if (st == JPM_ERR_NOT_INDEPENDENT) {
        std::cout << "{\"ok\":false,\"violation\":[\"" << first.str() << "\",\"" << second.str() << "\"]}\n";
        std::cerr << "adjacent pair: " << first.str() << " " << second.str() << "\n";
        return kExitViolation;
    }
    return report(st);
}

int print_json_result(jpm_status st, Owned& json) {
    if (st != JPM_OK && st != JPM_ERR_BUDGET_EXCEEDED) return report(st);
    std::cout << json.str() << "\n";
    return st == JPM_OK ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed Johnson-type distance graphs: generation, exact independence numbers, constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "jpm 1.0.0");

    SpecFlags spec;
    BudgetFlags budget;

    auto* gen = app.add_subcommand("gen", "write a family graph as DIMACS or JSON");
    std::string out_path = "-";
    std::string format = "dimacs";
    std::uint64_t cap = 0;
    add_spec_flags(gen, spec);
    gen->add_option("-o,--output", out_path, "output file, - for stdout");
    gen->add_option("--format", format, "dimacs or json")->check(CLI::IsMember({"dimacs", "json"}));
    gen->add_option("--cap", cap, "vertex cap (default 200000)");

    auto* alpha = app.add_subcommand("alpha", "exact independence number with a certificate");
    std::string dimacs;
    std::string graph_json;
    bool greedy = false;
    std::uint64_t seed = 0;
    add_spec_flags(alpha, spec, false);
    add_budget_flags(alpha, budget);
    alpha->add_option("--dimacs", dimacs, "read a DIMACS graph instead of a family");
    alpha->add_option("--graph", graph_json, "read a JSON graph written by gen");
    alpha->add_flag("--greedy", greedy, "randomised greedy lower bound only");
    alpha->add_option("--seed", seed, "greedy seed");

    auto* check = app.add_subcommand("paper-check", "run the reproduction table");
    std::vector<std::string> groups;
    bool extended = false;
    bool list = false;
    std::string csv_path;
    add_budget_flags(check, budget);
    check->add_option("--group", groups, "only rows in these groups");
    check->add_flag("--extended", extended, "six-hour budget per row");
    check->add_option("--csv", csv_path, "also write CSV to this file");
    check->add_flag("--list", list, "list rows without running them");

    auto* construct = app.add_subcommand("construct", "build and verify an explicit family");
    std::string name;
    std::string supports;
    std::string variant = "auto";
    construct->add_option("name", name, "tail-signs, kleitman, double-sign, full-sign-lift, pair-blocks")
        ->required()
        ->check(CLI::IsMember({"tail-signs", "kleitman", "double-sign", "full-sign-lift", "pair-blocks"}));
    add_spec_flags(construct, spec, false);
    add_budget_flags(construct, budget);
    construct->add_option("--supports", supports, "supports as 1,2,3;4,5,6 (default: found by the solver)");
    construct->add_option("--variant", variant, "kleitman variant: auto, per-support, jkl-block")
        ->check(CLI::IsMember({"auto", "per-support", "jkl-block"}));

    auto* verify = app.add_subcommand("verify", "check an independence certificate");
    std::string cert_path;
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    auto* bound = app.add_subcommand("bound", "closed-form values and bounds");
    bound->require_subcommand(1);
    auto* predict = bound->add_subcommand("predict", "predicted independence number of a family");
    add_spec_flags(predict, spec);
    auto* kleitman = bound->add_subcommand("kleitman", "largest subset of {0,1}^n with diameter D");
    int diameter = 0;
    kleitman->add_option("-n,--n", spec.n)->required();
    kleitman->add_option("-D,--diameter", diameter)->required();
    auto* nagy = bound->add_subcommand("nagy", "independence number of J(n,3,1)");
    nagy->add_option("-n,--n", spec.n)->required();
    auto* katona = bound->add_subcommand("katona", "averaging bound floor(vG * alphaH / vH)");
    std::uint64_t vG = 0, vH = 0, alphaH = 0;
    katona->add_option("--vG", vG)->required();
    katona->add_option("--vH", vH)->required();
    katona->add_option("--alphaH", alphaH)->required();
    auto* ratio = bound->add_subcommand("ratio", "alpha / |V| of JPM(n,k,t) over a range of n");
    int n_from = 0, n_to = 0;
    ratio->add_option("-k,--k", spec.k)->required();
    ratio->add_option("-t,--t", spec.t)->required();
    ratio->add_option("--from", n_from)->required();
    ratio->add_option("--to", n_to)->required();
    add_budget_flags(ratio, budget);

    auto* hyper = app.add_subcommand("hypergraph", "Reed-Solomon b-simple k-partite hypergraph");
    std::uint32_t p = 0;
    int hk = 0, hb = 0, choose_n = 0;
    hyper->add_option("-p,--p", p, "prime");
    hyper->add_option("-k,--k", hk, "number of parts");
    hyper->add_option("-b,--b", hb, "edges share fewer than b+1 vertices");
    hyper->add_option("--choose", choose_n, "print the prime chosen for dimension n (with -k)");

    try {
        app.parse(normalise_args(argc, argv));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    if (gen->parsed()) return cmd_gen(spec, out_path, format, cap);
    if (alpha->parsed()) {
        if (dimacs.empty() && graph_json.empty() && (spec.n == 0 || spec.k == 0)) {
            std::cerr << "error: give a family (-n, -k) or --dimacs/--graph\n";
            return kExitError;
        }
        return cmd_alpha(spec, dimacs, graph_json, budget, greedy, seed);
    }
    if (check->parsed()) return cmd_reproduce(groups, budget, extended, csv_path, list);
    if (construct->parsed()) return cmd_construct(name, spec, supports, variant, budget);
    if (verify->parsed()) return cmd_verify(cert_path);
    if (predict->parsed()) {
        jpm_spec s;
        if (jpm_status st = make_spec(spec, &s); st != JPM_OK) return report(st);
        Owned json;
        return print_json_result(jpm_predicted_alpha(&s, &json.text), json);
    }
    if (kleitman->parsed() || nagy->parsed() || katona->parsed()) {
        std::uint64_t value = 0;
        jpm_status st = kleitman->parsed() ? jpm_kleitman_S(spec.n, diameter, &value)
                        : nagy->parsed()   ? jpm_nagy_alpha(spec.n, &value)
                                           : jpm_katona_upper_bound(vG, vH, alphaH, &value);
        if (st != JPM_OK) return report(st);
        std::cout << value << "\n";
        return kExitOk;
    }
    if (ratio->parsed()) {
        const jpm_budget b = make_budget(budget);
        Owned json;
        return print_json_result(jpm_ratio_sequence(spec.k, spec.t, n_from, n_to, &b, &json.text), json);
    }
    if (hyper->parsed()) {
        if (choose_n > 0) {
            std::uint32_t chosen = 0;
            int exceeds = 0;
            if (jpm_status st = jpm_choose_prime(choose_n, hk, &chosen, &exceeds); st != JPM_OK) return report(st);
            std::cout << "{\"p\":" << chosen << ",\"exceeds_power_of_two\":" << (exceeds ? "true" : "false")
                      << "}\n";
            return kExitOk;
        }
        Owned json;
        return print_json_result(jpm_rs_hypergraph(p, hk, hb, &json.text), json);
    }
    return kExitError;
}
