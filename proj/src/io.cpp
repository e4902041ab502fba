#include "jpm/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "jpm/error.hpp"

namespace jpm {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

template <typename T>
T required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        parse_error(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

void write_dimacs(std::ostream& out, const DistanceGraph& g) {
    if (g.spec()) out << "c " << g.spec()->label() << "\n";
    out << "p edge " << g.order() << " " << g.edge_count() << "\n";
    for (std::size_t u = 0; u < g.order(); ++u) {
        g.row(u).for_each([&](std::size_t v) {
            if (v > u) out << "e " << (u + 1) << " " << (v + 1) << "\n";
        });
    }
}

DistanceGraph read_dimacs(std::istream& in) {
    std::string line;
    std::size_t order = 0;
    std::size_t declared_edges = 0;
    bool header = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            if (header || !(fields >> format >> order >> declared_edges) ||
                (format != "edge" && format != "col")) {
                parse_error("line " + std::to_string(line_no) + ": bad problem line");
            }
            header = true;
        } else if (tag == "e") {
            long long a = 0;
            long long b = 0;
            if (!header || !(fields >> a >> b) || a < 1 || b < 1 ||
                static_cast<std::size_t>(a) > order || static_cast<std::size_t>(b) > order) {
                parse_error("line " + std::to_string(line_no) + ": bad edge line");
            }
            if (a == b) parse_error("line " + std::to_string(line_no) + ": self-loop");
            edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
        } else {
            parse_error("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
        }
    }
    if (!header) parse_error("missing 'p edge' line");
    return DistanceGraph::from_edges(order, edges);
}

json spec_to_json(const GraphSpec& spec) {
    return json{{"kind", to_string(spec.kind)}, {"n", spec.n},   {"k", spec.k},
                {"t", spec.t},                  {"l", spec.l},   {"parity", to_string(spec.parity)}};
}

GraphSpec spec_from_json(const json& j) {
    GraphSpec spec;
    const auto kind = parse_family_kind(required<std::string>(j, "kind"));
    if (!kind) parse_error("unknown family kind");
    spec.kind = *kind;
    spec.n = required<int>(j, "n");
    spec.k = required<int>(j, "k");
    spec.t = j.value("t", 0);
    spec.l = j.value("l", 0);
    const auto parity = parse_parity(j.value("parity", std::string("even")));
    if (!parity) parse_error("parity must be even or odd");
    spec.parity = *parity;
    spec.validate();
    return spec;
}

json graph_to_json(const DistanceGraph& g) {
    json out;
    out["spec"] = g.spec() ? spec_to_json(*g.spec()) : json(nullptr);
    json vertices = json::array();
    for (std::size_t v = 0; v < g.order(); ++v) vertices.push_back(g.vertex_label(v));
    out["vertices"] = std::move(vertices);
    json edges = json::array();
    for (std::size_t u = 0; u < g.order(); ++u) {
        g.row(u).for_each([&](std::size_t v) {
            if (v > u) edges.push_back({u + 1, v + 1});
        });
    }
    out["edges"] = std::move(edges);
    return out;
}

DistanceGraph graph_from_json(const json& j) {
    const auto labels = required<std::vector<std::string>>(j, "vertices");
    const auto raw_edges = required<std::vector<std::vector<std::size_t>>>(j, "edges");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : raw_edges) {
        if (e.size() != 2 || e[0] < 1 || e[1] < 1 || e[0] > labels.size() || e[1] > labels.size()) {
            parse_error("edge entries must be 1-based vertex pairs");
        }
        edges.emplace_back(e[0] - 1, e[1] - 1);
    }
    DistanceGraph anonymous = DistanceGraph::from_edges(labels.size(), edges);
    if (!j.contains("spec") || j.at("spec").is_null()) return anonymous;

    const GraphSpec spec = spec_from_json(j.at("spec"));
    std::vector<SignedVector> vertices;
    for (const auto& label : labels) {
        vertices.push_back(decode(label));
        if (vertices.back().n != spec.n) parse_error("vertex '" + label + "' has the wrong dimension");
        if (vertices.size() > 1 && !(vertices[vertices.size() - 2] < vertices.back())) {
            parse_error("vertices must be listed in canonical order");
        }
    }
    std::vector<Bitset> rows;
    rows.reserve(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) rows.push_back(anonymous.row(v));
    return DistanceGraph(spec, std::move(vertices), std::move(rows));
}

json certificate_to_json(const IndependenceCertificate& cert) {
    json out;
    out["spec"] = cert.spec ? spec_to_json(*cert.spec) : json(nullptr);
    out["alpha"] = cert.alpha;
    out["witness"] = cert.witness;
    out["verified"] = cert.status == CertificateStatus::Verified;
    out["optimal"] = cert.optimal;
    out["nodes"] = cert.search_nodes;
    out["millis"] = cert.elapsed.count();
    if (cert.violation) out["violation"] = {cert.violation->first, cert.violation->second};
    return out;
}

IndependenceCertificate certificate_from_json(const json& j) {
    IndependenceCertificate cert;
    if (!j.is_object()) parse_error("certificate must be a JSON object");
    if (j.contains("spec") && !j.at("spec").is_null()) cert.spec = spec_from_json(j.at("spec"));
    cert.witness = required<std::vector<std::string>>(j, "witness");
    cert.alpha = j.value("alpha", cert.witness.size());
    cert.status = j.value("verified", false) ? CertificateStatus::Verified : CertificateStatus::Unverified;
    cert.optimal = j.value("optimal", false);
    cert.search_nodes = j.value("nodes", std::uint64_t{0});
    cert.elapsed = std::chrono::milliseconds(j.value("millis", std::int64_t{0}));
    return cert;
}

json report_to_json(const ConstructionReport& report) {
    json out;
    out["construction"] = report.name;
    out["spec"] = spec_to_json(report.spec);
    out["alpha"] = report.size;
    json witness = json::array();
    for (const auto& v : report.family) witness.push_back(encode(v));
    out["witness"] = std::move(witness);
    out["verified"] = report.verified;
    out["claimed_size"] = report.claimed_size ? json(*report.claimed_size) : json(nullptr);
    out["notes"] = report.notes;
    if (report.violation) {
        out["violation"] = {encode(report.violation->first), encode(report.violation->second)};
    }
    return out;
}

json hypergraph_to_json(const BSimpleHypergraph& h) {
    json edges = json::array();
    for (const auto& edge : h.edges) {
        json e = json::array();
        for (std::size_t i = 0; i < edge.size(); ++i) e.push_back({i + 1, edge[i]});
        edges.push_back(std::move(e));
    }
    return json{{"p", h.p}, {"k", h.k}, {"b", h.b}, {"edges", std::move(edges)}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << contents;
    if (!out) throw Error(ErrorCode::Io, "write to " + path + " failed");
}

}  // namespace jpm
