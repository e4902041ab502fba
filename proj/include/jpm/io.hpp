#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "jpm/constructions.hpp"
#include "jpm/families.hpp"
#include "jpm/rs_hypergraph.hpp"
#include "jpm/solver.hpp"

namespace jpm {

/// `p edge V E` then `e i j` (i < j, 1-based, canonical order), preceded by
/// a `c` comment naming the spec when there is one.
void write_dimacs(std::ostream& out, const DistanceGraph& g);
/// Accepts `c`, `p edge|col V E` and `e i j` lines. Throws ErrorCode::Parse.
DistanceGraph read_dimacs(std::istream& in);

nlohmann::json spec_to_json(const GraphSpec& spec);
GraphSpec spec_from_json(const nlohmann::json& j);

/// {spec, vertices: [...], edges: [[i, j], ...]} with 1-based indices.
nlohmann::json graph_to_json(const DistanceGraph& g);
DistanceGraph graph_from_json(const nlohmann::json& j);

/// {spec, alpha, witness, verified, nodes, millis} plus `optimal`.
nlohmann::json certificate_to_json(const IndependenceCertificate& cert);
IndependenceCertificate certificate_from_json(const nlohmann::json& j);

/// Certificate schema with a `construction` field and the claimed size.
nlohmann::json report_to_json(const ConstructionReport& report);

/// {p, k, b, edges: [[[copy, elem], ...], ...]} with copies numbered from 1.
nlohmann::json hypergraph_to_json(const BSimpleHypergraph& h);

nlohmann::json parse_json_text(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace jpm
