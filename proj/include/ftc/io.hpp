#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ftc/construct.hpp"
#include "ftc/decompose.hpp"
#include "ftc/graph.hpp"
#include "ftc/interval.hpp"
#include "ftc/lp.hpp"

namespace ftc {

// Edge-list text: one "u v" pair per line, '#' starts a comment. Vertex ids
// are assigned by first appearance, so the same file always yields the same
// graph.
Graph read_edge_list(std::istream& in);

// graph6 (one graph per line, short or long form); labels are "0".."n-1".
Graph read_graph6_line(const std::string& line);

// Dispatches on extension: ".g6" -> graph6 (first line), anything else ->
// edge list. Throws std::runtime_error with a line number on parse errors.
Graph load_graph(const std::string& path);

std::string write_edge_list(const Graph& g);

// ------------------------------------------------------------------- JSON
// Rationals are "num/den" strings throughout; round-trips are byte-exact.

nlohmann::json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

nlohmann::json isometry_to_json(const PiecewiseIsometry& iso);
PiecewiseIsometry isometry_from_json(const nlohmann::json& j);

nlohmann::json weighted_coloring_to_json(const Graph& g, const WeightedColoring& w);
WeightedColoring weighted_coloring_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json interval_coloring_to_json(const Graph& g, const IntervalColoring& c);
IntervalColoring interval_coloring_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json certificate_to_json(const Graph& g, const LPCertificate& cert);

nlohmann::json decomposition_to_json(const Graph& g, const Decomposition& d);
Decomposition decomposition_from_json(const Graph& g, const nlohmann::json& j);

// Canonical dump used by the CLI: 2-space indent, sorted keys, newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace ftc
