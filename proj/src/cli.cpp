#include "rackbench/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rackbench/io.hpp"

namespace rackbench {

namespace {

struct Options {
  std::string format = "table";
  bool zero_based = false;
  double budget_seconds = 600.0;
  int jobs = 1;
};

int shown(int v, const Options& opt) { return v + (opt.zero_based ? 0 : 1); }

std::string perm_str(const Perm& p, const Options& opt) {
  return cycle_string(p, !opt.zero_based);
}

void emit_json(std::ostream& out, const nlohmann::json& j) {
  out << j.dump(2) << "\n";
}

Graph family_graph(const std::string& family, int n) {
  if (family == "complete") return complete_graph(n);
  if (family == "edgeless") return edgeless_graph(n);
  if (family == "star") {
    if (n < 2) throw std::invalid_argument("star family: need order n >= 2");
    return star_graph(n - 1);
  }
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  throw std::invalid_argument("unknown family " + family);
}

std::variant<Graph, Digraph> load_graph_source(const std::string& family, int n,
                                               const std::string& file) {
  if (!family.empty() && !file.empty()) {
    throw ParseError("give either --family/--n or a file, not both");
  }
  if (!family.empty()) {
    if (n < 0) throw ParseError("--family needs --n");
    return family_graph(family, n);
  }
  if (file.empty()) throw ParseError("need a graph: --family F --n N or a file");
  return graph_from_json(parse_json(read_source(file)));
}

std::vector<int> parse_subset(const std::string& text, int order) {
  if (text.empty() || text == "all") {
    std::vector<int> all(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  if (text == "none") return {};
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad subset element \"" + item + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CensusBudget make_budget(const Options& opt) {
  CensusBudget b;
  b.wall_seconds = opt.budget_seconds;
  b.jobs = opt.jobs;
  return b;
}

// ---- census ----

void cmd_census(std::ostream& out, const Options& opt, const std::string& family,
                int n, const std::string& file) {
  const auto g = load_graph_source(family, n, file);
  const CensusResult r = std::visit(
      [&](const auto& graph) { return mu_census(graph, make_budget(opt)); }, g);
  if (opt.format == "json") {
    emit_json(out, to_json(r));
    return;
  }
  out << "mu_rack:        " << r.mu_rack << "\n"
      << "mu_qnd:         " << r.mu_qnd << "\n"
      << "total_markings: " << r.total_markings << "\n"
      << "elapsed_ms:     " << r.elapsed.count() << "\n";
}

// ---- classify ----

void cmd_classify(std::ostream& out, const Options& opt, const std::string& source) {
  const LabeledDigraph g = labeled_from_string(read_source(source));
  const ClassReport r = classify(g);
  if (opt.format == "json") {
    nlohmann::json j{{"deterministic", r.deterministic},
                     {"codeterministic", r.codeterministic},
                     {"source_complete", r.source_complete},
                     {"target_complete", r.target_complete},
                     {"in_d", r.in_d},
                     {"in_q", r.in_q},
                     {"first_rack_cond", r.first_rack_cond},
                     {"second_rack_cond", r.second_rack_cond},
                     {"label_idempotent", r.label_idempotent},
                     {"label_involutory", r.label_involutory},
                     {"realizes", r.realizes()}};
    if (!r.rack_cond_note.empty()) j["rack_cond_note"] = r.rack_cond_note;
    emit_json(out, j);
    return;
  }
  auto flag = [&](const char* name, bool val) {
    out << std::left << std::setw(18) << name << (val ? "yes" : "no") << "\n";
  };
  flag("deterministic", r.deterministic);
  flag("codeterministic", r.codeterministic);
  flag("source-complete", r.source_complete);
  flag("target-complete", r.target_complete);
  flag("class D", r.in_d);
  flag("class Q", r.in_q);
  if (r.in_q) {
    flag("first rack cond", r.first_rack_cond);
    flag("second rack cond", r.second_rack_cond);
  } else {
    out << "rack conditions   skipped: not in class Q\n";
  }
  flag("label-idempotent", r.label_idempotent);
  flag("label-involutory", r.label_involutory);
  const auto verdicts = r.realizes();
  out << "realizes:         ";
  if (verdicts.empty()) {
    out << "none of the tracked classes\n";
  } else {
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      out << (i ? ", " : "") << verdicts[i];
    }
    out << "\n";
  }
}

// ---- cayley ----

void cmd_cayley(std::ostream& out, const Options& opt, const std::string& source,
                const std::string& subset, const std::string& mode) {
  const FiniteMagma q = magma_from_json(parse_json(read_source(source)));
  const std::vector<int> s = parse_subset(subset, q.order());
  if (mode == "labeled") {
    const LabeledDigraph g = labeled_cayley(q, s);
    if (opt.format == "json") {
      emit_json(out, to_json(g));
    } else {
      for (const auto& [v, l, w] : g.edges()) {
        out << shown(v, opt) << " --" << shown(l, opt) << "--> " << shown(w, opt)
            << "\n";
      }
    }
    return;
  }
  if (mode == "directed") {
    const Digraph g = cayley_digraph(q, s);
    if (opt.format == "json") {
      emit_json(out, to_json(g));
    } else {
      for (auto [u, v] : g.edges()) {
        out << shown(u, opt) << " -> " << shown(v, opt) << "\n";
      }
    }
    return;
  }
  if (mode == "undirected") {
    const Graph g = cayley_graph(q, s);
    if (opt.format == "json") {
      emit_json(out, to_json(g));
    } else {
      for (auto [u, v] : g.edges()) {
        out << shown(u, opt) << " -- " << shown(v, opt) << "\n";
      }
    }
    return;
  }
  throw ParseError("mode must be directed, undirected, or labeled");
}

// ---- aut ----

void cmd_aut(std::ostream& out, const Options& opt, const std::string& family, int n,
             const std::string& file) {
  const auto g = load_graph_source(family, n, file);
  const PermGroup aut = std::visit(
      [](const auto& graph) { return automorphism_group(graph); }, g);
  if (opt.format == "json") {
    nlohmann::json elems = nlohmann::json::array();
    for (const Perm& p : aut.elements()) elems.push_back(to_json(p));
    emit_json(out, nlohmann::json{{"degree", aut.degree()},
                                  {"order", aut.order()},
                                  {"elements", std::move(elems)}});
    return;
  }
  out << "degree: " << aut.degree() << "\n"
      << "order:  " << aut.order() << "\n";
  for (const Perm& p : aut.elements()) out << "  " << perm_str(p, opt) << "\n";
}

// ---- check ----

void cmd_check(std::ostream& out, const Options& opt, const std::string& source) {
  const FiniteMagma q = magma_from_json(parse_json(read_source(source)));
  const bool rq = is_right_quasigroup(q);
  bool rack = false, quandle = false, involutory = false, kei = false;
  if (rq) {
    const RightQuasigroup rqq(q.rows());
    rack = is_rack(rqq);
    quandle = is_quandle(rqq);
    involutory = is_involutory(rqq);
    kei = is_kei(rqq);
  }
  if (opt.format == "json") {
    emit_json(out, nlohmann::json{{"order", q.order()},
                                  {"right_cancellative", is_right_cancellative(q)},
                                  {"right_divisible", is_right_divisible(q)},
                                  {"right_quasigroup", rq},
                                  {"rack", rack},
                                  {"quandle", quandle},
                                  {"involutory", involutory},
                                  {"kei", kei}});
    return;
  }
  auto flag = [&](const char* name, bool val) {
    out << std::left << std::setw(20) << name << (val ? "yes" : "no") << "\n";
  };
  out << "order:              " << q.order() << "\n";
  flag("right-cancellative", is_right_cancellative(q));
  flag("right-divisible", is_right_divisible(q));
  flag("right quasigroup", rq);
  flag("rack", rack);
  flag("quandle", quandle);
  flag("involutory", involutory);
  flag("kei", kei);
}

// ---- reflections ----

void cmd_reflections(std::ostream& out, const Options& opt, int n) {
  const auto refls = reflections(n);
  const auto markings = reflection_markings(n);
  if (opt.format == "json") {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : refls) {
      jr.push_back({{"perm", to_json(r.perm)}, {"axis", r.axis_vertices}});
    }
    nlohmann::json jm = nlohmann::json::array();
    for (const auto& m : markings) {
      nlohmann::json assignment = nlohmann::json::array();
      for (const Perm& p : m.assignment) assignment.push_back(to_json(p));
      jm.push_back(std::move(assignment));
    }
    emit_json(out, nlohmann::json{{"n", n},
                                  {"marking_count", markings.size()},
                                  {"reflections", std::move(jr)},
                                  {"markings", std::move(jm)}});
    return;
  }
  out << "n: " << n << "\n";
  out << "reflections of the " << n << "-cycle:\n";
  for (const auto& r : refls) {
    out << "  " << perm_str(r.perm, opt) << "  axis:";
    if (r.axis_vertices.empty()) out << " (none)";
    for (int v : r.axis_vertices) out << " " << shown(v, opt);
    out << "\n";
  }
  out << "quandle markings of C_" << n << ": " << markings.size() << "\n";
  for (const auto& m : markings) {
    out << "  [";
    for (std::size_t v = 0; v < m.assignment.size(); ++v) {
      out << (v ? ", " : "") << perm_str(m.assignment[v], opt);
    }
    out << "]\n";
  }
}

// ---- table1 ----

struct Cell {
  std::string text;  // "(13,5)", "?", or "n/a"
};

Cell census_cell(const Graph& g, const CensusBudget& budget) {
  try {
    const CensusResult r = mu_census(g, budget);
    return Cell{"(" + std::to_string(r.mu_rack) + "," + std::to_string(r.mu_qnd) + ")"};
  } catch (const BudgetExceeded&) {
    return Cell{"?"};
  }
}

void cmd_table1(std::ostream& out, const Options& opt, int max_complete, int max_star,
                int max_cycle) {
  const int max_n = std::max({7, max_complete, max_star, max_cycle});
  const CensusBudget budget = make_budget(opt);

  std::vector<Cell> complete_row, star_row, cycle_row;
  for (int n = 0; n <= max_n; ++n) {
    complete_row.push_back(n <= max_complete ? census_cell(complete_graph(n), budget)
                                             : Cell{"?"});
    if (n == 0) {
      star_row.push_back(Cell{"n/a"});
    } else if (n > max_star) {
      star_row.push_back(Cell{"?"});
    } else {
      // K_{1,0} is the one-vertex graph
      star_row.push_back(census_cell(n == 1 ? edgeless_graph(1) : star_graph(n - 1),
                                     budget));
    }
    if (n < 3) {
      cycle_row.push_back(Cell{"n/a"});
    } else {
      cycle_row.push_back(n <= max_cycle ? census_cell(cycle_graph(n), budget)
                                         : Cell{"?"});
    }
  }

  if (opt.format == "json") {
    auto row_json = [&](const std::vector<Cell>& row) {
      nlohmann::json arr = nlohmann::json::array();
      for (int n = 0; n <= max_n; ++n) {
        const std::string& text = row[static_cast<std::size_t>(n)].text;
        if (!text.empty() && text[0] == '(') {
          const auto comma = text.find(',');
          arr.push_back(
              {{"n", n},
               {"mu_rack", std::stoull(text.substr(1, comma - 1))},
               {"mu_qnd", std::stoull(text.substr(comma + 1, text.size() - comma - 2))}});
        } else {
          arr.push_back({{"n", n}, {"cell", text}});
        }
      }
      return arr;
    };
    nlohmann::json columns = nlohmann::json::array();
    for (int n = 0; n <= max_n; ++n) columns.push_back(n);
    emit_json(out, nlohmann::json{{"columns", std::move(columns)},
                                  {"complete", row_json(complete_row)},
                                  {"star", row_json(star_row)},
                                  {"cycle", row_json(cycle_row)}});
    return;
  }

  std::size_t width = 3;
  for (const auto* row : {&complete_row, &star_row, &cycle_row}) {
    for (const Cell& c : *row) width = std::max(width, c.text.size());
  }
  width += 2;
  auto print_row = [&](const std::string& label, const std::vector<Cell>& row) {
    out << std::left << std::setw(10) << label << std::right;
    for (const Cell& c : row) out << std::setw(static_cast<int>(width)) << c.text;
    out << "\n";
  };
  out << std::left << std::setw(10) << "n" << std::right;
  for (int n = 0; n <= max_n; ++n) out << std::setw(static_cast<int>(width)) << n;
  out << "\n";
  print_row("K_n", complete_row);
  print_row("K_{1,n-1}", star_row);
  print_row("C_n", cycle_row);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite right quasigroups, racks, quandles, and their Cayley graphs"};
  app.require_subcommand(1);

  Options opt;
  std::string family, file, source, subset, mode = "directed";
  int n = -1;
  int refl_n = 3;
  int max_complete = 4, max_star = 5, max_cycle = 7;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    sub->add_flag("--zero-based", opt.zero_based,
                  "render vertices 0-based (default 1-based)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-seconds", opt.budget_seconds,
                    "wall-clock budget per census")
        ->envname("RACKBENCH_BUDGET_SECONDS")
        ->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "worker threads for census search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_graph_source = [&](CLI::App* sub) {
    sub->add_option("--family", family, "graph family: complete|edgeless|star|path|cycle");
    sub->add_option("--n", n, "family order (vertex count)");
    sub->add_option("file", file, "graph JSON file ('-' for stdin)");
  };

  CLI::App* census = app.add_subcommand("census", "count rack and quandle markings");
  add_graph_source(census);
  add_budget(census);
  add_format(census);
  census->callback([&] { cmd_census(out, opt, family, n, file); });

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify a labeled digraph");
  classify_cmd->add_option("source", source, "labeled digraph file ('-' for stdin)")
      ->required();
  add_format(classify_cmd);
  classify_cmd->callback([&] { cmd_classify(out, opt, source); });

  CLI::App* cayley = app.add_subcommand("cayley", "Cayley (di)graph of a magma");
  cayley->add_option("source", source, "magma JSON file ('-' for stdin)")->required();
  cayley->add_option("--subset", subset, "defining subset: comma list, 'all', or 'none'");
  cayley->add_option("--mode", mode, "directed|undirected|labeled")
      ->check(CLI::IsMember({"directed", "undirected", "labeled"}))
      ->capture_default_str();
  add_format(cayley);
  cayley->callback([&] { cmd_cayley(out, opt, source, subset, mode); });

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of a (di)graph");
  add_graph_source(aut);
  add_format(aut);
  aut->callback([&] { cmd_aut(out, opt, family, n, file); });

  CLI::App* check = app.add_subcommand("check", "test magma axioms");
  check->add_option("source", source, "magma JSON file ('-' for stdin)")->required();
  add_format(check);
  check->callback([&] { cmd_check(out, opt, source); });

  CLI::App* refl = app.add_subcommand("reflections",
                                      "dihedral reflections and cycle markings");
  refl->add_option("n", refl_n, "cycle length (n >= 3)")->required();
  add_format(refl);
  refl->callback([&] { cmd_reflections(out, opt, refl_n); });

  CLI::App* table1 = app.add_subcommand("table1", "census table for the three families");
  table1->add_option("--max-complete", max_complete, "largest K_n computed")
      ->capture_default_str();
  table1->add_option("--max-star", max_star, "largest K_{1,n-1} computed")
      ->capture_default_str();
  table1->add_option("--max-cycle", max_cycle, "largest C_n computed")
      ->capture_default_str();
  add_budget(table1);
  add_format(table1);
  table1->callback([&] { cmd_table1(out, opt, max_complete, max_star, max_cycle); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (partial: mu_rack >= " << e.partial().mu_rack
        << ", mu_qnd >= " << e.partial().mu_qnd << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rackbench
