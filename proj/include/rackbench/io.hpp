#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "rackbench/algebra.hpp"
#include "rackbench/census.hpp"
#include "rackbench/graphs.hpp"
#include "rackbench/labeled.hpp"
#include "rackbench/perm.hpp"

namespace rackbench {

// JSON shapes:
//   Perm            [1, 0, 2]
//   PermGroup       {"degree": n, "generators": [[...], ...]}
//   magma           {"order": n, "right_mult": [[...], ...]}
//   (di)graph       {"kind": "graph"|"digraph", "order": n, "edges": [[u,v], ...]}
//   labeled digraph {"order": n, "labels": [...], "edges": [[v,l,w], ...]}
//   census result   {"mu_rack": r, "mu_qnd": q, "total_markings": t, "elapsed_ms": e}
// All validation errors surface as ParseError.

nlohmann::json to_json(const Perm& p);
nlohmann::json to_json(const PermGroup& g);
nlohmann::json to_json(const FiniteMagma& q);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Digraph& g);
nlohmann::json to_json(const LabeledDigraph& g);
nlohmann::json to_json(const CensusResult& r);

Perm perm_from_json(const nlohmann::json& j);
FiniteMagma magma_from_json(const nlohmann::json& j);
RightQuasigroup right_quasigroup_from_json(const nlohmann::json& j);
std::variant<Graph, Digraph> graph_from_json(const nlohmann::json& j);
LabeledDigraph labeled_from_json(const nlohmann::json& j);

/// Line-oriented text form for hand-written labeled digraphs. Edge lines read
/// "v --l--> w"; optional "order: n" and "labels: a b ..." directives pin the
/// vertex count and label set (otherwise both are inferred from the edges).
/// '#' starts a comment.
LabeledDigraph labeled_from_text(std::istream& in);

/// Sniffs JSON (leading '{') vs the text form.
LabeledDigraph labeled_from_string(const std::string& text);

nlohmann::json parse_json(const std::string& text);
std::string read_source(const std::string& path_or_dash);  // "-" reads stdin

}  // namespace rackbench
