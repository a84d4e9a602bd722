#include "rackbench/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rackbench {

namespace {

template <typename Fn>
auto wrap_parse(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<int> int_vector(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw ParseError(std::string(what) + ": expected integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

nlohmann::json to_json(const Perm& p) { return p.images(); }

nlohmann::json to_json(const PermGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm& p : g.generators()) gens.push_back(to_json(p));
  return {{"degree", g.degree()}, {"generators", std::move(gens)}};
}

nlohmann::json to_json(const FiniteMagma& q) {
  return {{"order", q.order()}, {"right_mult", q.rows()}};
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"kind", "graph"}, {"order", g.order()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const Digraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"kind", "digraph"}, {"order", g.order()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const LabeledDigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [v, l, w] : g.edges()) edges.push_back({v, l, w});
  return {{"order", g.order()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const CensusResult& r) {
  return {{"mu_rack", r.mu_rack},
          {"mu_qnd", r.mu_qnd},
          {"total_markings", r.total_markings},
          {"elapsed_ms", r.elapsed.count()}};
}

Perm perm_from_json(const nlohmann::json& j) {
  return wrap_parse("permutation", [&] { return Perm(int_vector(j, "permutation")); });
}

FiniteMagma magma_from_json(const nlohmann::json& j) {
  return wrap_parse("magma", [&] {
    const int order = field(j, "order").get<int>();
    const auto& rows_json = field(j, "right_mult");
    if (!rows_json.is_array() || static_cast<int>(rows_json.size()) != order) {
      throw ParseError("magma: right_mult must list one row per element");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& row : rows_json) rows.push_back(int_vector(row, "magma row"));
    return FiniteMagma(std::move(rows));
  });
}

RightQuasigroup right_quasigroup_from_json(const nlohmann::json& j) {
  return wrap_parse("right quasigroup",
                    [&] { return RightQuasigroup(magma_from_json(j).rows()); });
}

std::variant<Graph, Digraph> graph_from_json(const nlohmann::json& j) {
  return wrap_parse("graph", [&]() -> std::variant<Graph, Digraph> {
    const std::string kind = field(j, "kind").get<std::string>();
    const int order = field(j, "order").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : field(j, "edges")) {
      const auto pair = int_vector(e, "edge");
      if (pair.size() != 2) throw ParseError("edge: expected [u, v]");
      edges.emplace_back(pair[0], pair[1]);
    }
    if (kind == "graph") return Graph(order, std::move(edges));
    if (kind == "digraph") return Digraph(order, std::move(edges));
    throw ParseError("graph kind must be \"graph\" or \"digraph\"");
  });
}

LabeledDigraph labeled_from_json(const nlohmann::json& j) {
  return wrap_parse("labeled digraph", [&] {
    const int order = field(j, "order").get<int>();
    std::vector<int> labels = int_vector(field(j, "labels"), "labels");
    std::vector<std::array<int, 3>> edges;
    for (const auto& e : field(j, "edges")) {
      const auto triple = int_vector(e, "edge");
      if (triple.size() != 3) throw ParseError("edge: expected [v, l, w]");
      edges.push_back({triple[0], triple[1], triple[2]});
    }
    return LabeledDigraph(order, std::move(labels), std::move(edges));
  });
}

LabeledDigraph labeled_from_text(std::istream& in) {
  std::vector<std::array<int, 3>> edges;
  std::vector<int> labels;
  bool have_labels = false;
  int order = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    const std::string at = " (line " + std::to_string(lineno) + ")";
    if (first == "order:") {
      if (!(ls >> order)) throw ParseError("bad order directive" + at);
      continue;
    }
    if (first == "labels:") {
      have_labels = true;
      int l;
      while (ls >> l) labels.push_back(l);
      continue;
    }
    int v, w;
    std::string arrow;
    try {
      v = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("expected an edge line \"v --l--> w\"" + at);
    }
    if (!(ls >> arrow >> w) || arrow.size() < 6 || arrow.substr(0, 2) != "--" ||
        arrow.substr(arrow.size() - 3) != "-->") {
      throw ParseError("expected an edge line \"v --l--> w\"" + at);
    }
    int l;
    try {
      l = std::stoi(arrow.substr(2, arrow.size() - 5));
    } catch (const std::exception&) {
      throw ParseError("bad label in \"" + arrow + "\"" + at);
    }
    edges.push_back({v, l, w});
  }
  if (!have_labels) {
    for (const auto& e : edges) labels.push_back(e[1]);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  }
  if (order < 0) {
    order = 0;
    for (const auto& [v, l, w] : edges) {
      order = std::max({order, v + 1, l + 1, w + 1});
    }
    for (int l : labels) order = std::max(order, l + 1);
  }
  return wrap_parse("labeled digraph", [&] {
    return LabeledDigraph(order, std::move(labels), std::move(edges));
  });
}

LabeledDigraph labeled_from_string(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    return labeled_from_json(parse_json(text));
  }
  std::istringstream in(text);
  return labeled_from_text(in);
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_source(const std::string& path_or_dash) {
  std::ostringstream buf;
  if (path_or_dash == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path_or_dash);
    if (!in) throw ParseError("cannot open " + path_or_dash);
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace rackbench
