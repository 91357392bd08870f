#include "lcdl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdl/engine.hpp"
#include "lcdl/graph.hpp"
#include "lcdl/graph_matrices.hpp"
#include "lcdl/oracle.hpp"
#include "lcdl/words.hpp"

namespace lcdl::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };
enum class Engine { Lcdl, Oracle };

struct CliConfig {
  std::string command;
  std::string input;
  Format format = Format::Text;
  Engine engine = Engine::Lcdl;
  std::size_t limit = kDefaultWordLimit;
  std::string dot_path;

  std::string from;
  std::string to;
  std::size_t length = 0;
  std::string kind = "path";
  std::string objective = "min";

  std::size_t alphabet_size = 0;
  std::string alphabet;
  bool count_only = false;
  std::size_t cap = kDefaultEnumerationCap;
};

json vertex_names(const DirectedGraph& g, const VertexPath& p) {
  json names = json::array();
  for (VertexId v : p.vertices) names.push_back(g.vertex_name(v));
  return names;
}

json item_json(const DirectedGraph& g, const VertexPath& p) {
  json cost = nullptr;
  if (g.has_costs()) cost = path_cost(g, p);
  return json{{"vertices", vertex_names(g, p)}, {"length", p.length()}, {"cost", cost}};
}

json natural_json(const Natural& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  return value.str();
}

std::string format_cost(double c) {
  std::ostringstream s;
  s << c;
  return s.str();
}

void write_items(std::ostream& out, Format format, const DirectedGraph& g, json query,
                 const std::vector<VertexPath>& items) {
  if (format == Format::Json) {
    json doc{{"query", std::move(query)}, {"items", json::array()}, {"count", items.size()}};
    for (const auto& p : items) doc["items"].push_back(item_json(g, p));
    out << doc.dump(2) << '\n';
    return;
  }
  out << items.size() << (items.size() == 1 ? " result" : " results") << '\n';
  for (const auto& p : items) {
    out << render_path(g, p);
    if (g.has_costs()) out << "  cost " << format_cost(path_cost(g, p));
    out << '\n';
  }
}

void write_dot(const std::string& path, const DirectedGraph& g, const std::vector<VertexPath>& highlighted) {
  std::set<Arc> marked;
  for (const auto& p : highlighted) {
    for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) marked.insert({p.vertices[t], p.vertices[t + 1]});
  }
  std::ofstream dot(path);
  if (!dot) throw UsageError("cannot write DOT file '" + path + "'");
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + '"';
  };
  dot << "digraph G {\n";
  for (const auto& name : g.vertex_names()) dot << "  " << quoted(name) << ";\n";
  for (const auto& arc : g.arcs()) {
    dot << "  " << quoted(g.vertex_name(arc.from)) << " -> " << quoted(g.vertex_name(arc.to));
    std::vector<std::string> attrs;
    if (g.has_costs()) attrs.push_back("label=" + quoted(format_cost(g.cost(arc.from, arc.to))));
    if (marked.contains(arc)) {
      attrs.emplace_back("color=red");
      attrs.emplace_back("penwidth=2");
    }
    if (!attrs.empty()) {
      dot << " [";
      for (std::size_t a = 0; a < attrs.size(); ++a) dot << (a ? ", " : "") << attrs[a];
      dot << ']';
    }
    dot << ";\n";
  }
  dot << "}\n";
}

class Runner {
 public:
  Runner(const CliConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void run() {
    if (config_.command == "words") return words();
    graph_.emplace(read_graph_file(config_.input));
    if (config_.command == "paths") return paths();
    if (config_.command == "circuits") return circuits();
    if (config_.command == "hamiltonian") return hamiltonian();
    if (config_.command == "count") return count();
    if (config_.command == "optimal") return optimal();
    if (config_.command == "matrix") return matrix();
    throw UsageError("unknown command '" + config_.command + "'");
  }

 private:
  const DirectedGraph& graph() const { return *graph_; }

  const LatinPowerSequence& powers() {
    if (!powers_) powers_.emplace(LatinPowerSequence::compute(graph(), PowerOptions{config_.limit}));
    return *powers_;
  }

  VertexId vertex(const std::string& name, const char* flag) const {
    if (name.empty()) throw UsageError(std::string("missing ") + flag);
    auto v = graph().find_vertex(name);
    if (!v) throw UsageError(std::string(flag) + ": unknown vertex '" + name + "'");
    return *v;
  }

  void finish(json query, const std::vector<VertexPath>& items) {
    if (!config_.dot_path.empty()) write_dot(config_.dot_path, graph(), items);
    write_items(out_, config_.format, graph(), std::move(query), items);
  }

  void paths() {
    const VertexId i = vertex(config_.from, "-i");
    const VertexId j = vertex(config_.to, "-j");
    const std::size_t n = graph().vertex_count();
    if (i == j) throw UsageError("paths needs distinct endpoints; use 'circuits' for i == j");
    if (config_.length < 1 || config_.length + 1 > n) {
      throw UsageError("-k must lie in 1.." + std::to_string(n - 1) + " for a graph with " + std::to_string(n) +
                       " vertices");
    }
    std::vector<VertexPath> items = config_.engine == Engine::Lcdl
                                        ? elementary_paths(powers(), i, j, config_.length).items
                                        : oracle::dfs_elementary_paths(graph(), i, j, config_.length).items;
    finish({{"command", "paths"}, {"from", config_.from}, {"to", config_.to}, {"length", config_.length}}, items);
  }

  void circuits() {
    const VertexId i = vertex(config_.from, "-i");
    const std::size_t n = graph().vertex_count();
    if (config_.length < 1 || config_.length > n) {
      throw UsageError("-k must lie in 1.." + std::to_string(n));
    }
    std::vector<VertexPath> items = config_.engine == Engine::Lcdl
                                        ? elementary_circuits(powers(), i, config_.length).items
                                        : oracle::dfs_elementary_circuits(graph(), i, config_.length).items;
    finish({{"command", "circuits"}, {"from", config_.from}, {"length", config_.length}}, items);
  }

  void hamiltonian() {
    const bool circuit = config_.kind == "circuit";
    std::vector<VertexPath> items;
    if (config_.engine == Engine::Lcdl) {
      items = circuit ? hamiltonian_circuits(powers()) : hamiltonian_paths(powers());
    } else {
      items = circuit ? oracle::dfs_hamiltonian_circuits(graph()) : oracle::dfs_hamiltonian_paths(graph());
    }
    finish({{"command", "hamiltonian"}, {"kind", config_.kind}}, items);
  }

  void count() {
    const VertexId i = vertex(config_.from, "-i");
    const VertexId j = vertex(config_.to, "-j");
    if (config_.length < 1) throw UsageError("-k must be at least 1");
    const Natural walks = config_.engine == Engine::Lcdl ? count_paths(graph(), i, j, config_.length)
                                                         : oracle::dfs_count_all_paths(graph(), i, j, config_.length);
    if (config_.format == Format::Json) {
      json doc{{"query", {{"command", "count"}, {"from", config_.from}, {"to", config_.to}, {"length", config_.length}}},
               {"items", json::array()},
               {"count", natural_json(walks)}};
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << walks.str() << '\n';
    }
    if (!config_.dot_path.empty()) write_dot(config_.dot_path, graph(), {});
  }

  void optimal() {
    if (!graph().has_costs()) throw UsageError("optimal needs arc costs in the graph file");
    HamiltonianQuery query;
    query.kind = config_.kind == "circuit" ? QueryKind::Circuit : QueryKind::Path;
    query.objective = config_.objective == "max" ? Objective::Max : Objective::Min;
    if (!config_.from.empty()) query.from = vertex(config_.from, "--from");
    if (!config_.to.empty()) {
      if (query.kind == QueryKind::Circuit) throw UsageError("--to does not apply to circuits");
      query.to = vertex(config_.to, "--to");
    }

    std::optional<CostedPath> best;
    if (config_.engine == Engine::Lcdl) {
      best = optimal_hamiltonian(graph(), powers(), query);
    } else {
      auto candidates = query.kind == QueryKind::Circuit ? oracle::dfs_hamiltonian_circuits(graph())
                                                         : oracle::dfs_hamiltonian_paths(graph());
      for (const auto& p : candidates) {
        if ((query.from && p.source() != *query.from) || (query.to && p.target() != *query.to)) continue;
        const double c = path_cost(graph(), p);
        if (!best || (query.objective == Objective::Min ? c < best->cost : c > best->cost)) best = CostedPath{p, c};
      }
    }

    json q{{"command", "optimal"}, {"kind", config_.kind}, {"objective", config_.objective}};
    q["from"] = config_.from.empty() ? json(nullptr) : json(config_.from);
    q["to"] = config_.to.empty() ? json(nullptr) : json(config_.to);
    std::vector<VertexPath> items;
    if (best) items.push_back(best->path);
    if (config_.format == Format::Text && !best) {
      out_ << "none\n";
      if (!config_.dot_path.empty()) write_dot(config_.dot_path, graph(), {});
      return;
    }
    finish(std::move(q), items);
  }

  void matrix() {
    const std::size_t n = graph().vertex_count();
    if (config_.length < 1 || config_.length > n) throw UsageError("-k must lie in 1.." + std::to_string(n));
    if (config_.engine == Engine::Oracle) throw UsageError("matrix is only available with --engine lcdl");
    const auto& m = powers().power(config_.length);
    if (config_.format == Format::Json) {
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
          json cell = json::array();
          for (const auto& w : m(i, j).words()) cell.push_back(w.render(*m.semiring().alphabet()));
          row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
      }
      json doc{{"query", {{"command", "matrix"}, {"length", config_.length}}},
               {"vertices", graph().vertex_names()},
               {"matrix", std::move(rows)},
               {"count", total_words(m)}};
      out_ << doc.dump(2) << '\n';
    } else {
      std::vector<std::size_t> widths(n, 0);
      std::vector<std::string> cells(n * n);
      std::size_t label_width = 0;
      for (std::size_t i = 0; i < n; ++i) {
        label_width = std::max(label_width, graph().vertex_name(i).size());
        for (std::size_t j = 0; j < n; ++j) {
          cells[i * n + j] = m(i, j).render();
          widths[j] = std::max({widths[j], cells[i * n + j].size(), graph().vertex_name(j).size()});
        }
      }
      auto row = [&](const std::string& label, auto&& text) {
        out_ << std::left << std::setw(int(label_width)) << label;
        for (std::size_t j = 0; j < n; ++j) {
          out_ << "  " << std::left << std::setw(j + 1 < n ? int(widths[j]) : 0) << text(j);
        }
        out_ << '\n';
      };
      row("", [&](std::size_t j) { return graph().vertex_name(j); });
      for (std::size_t i = 0; i < n; ++i) row(graph().vertex_name(i), [&](std::size_t j) { return cells[i * n + j]; });
    }
    if (!config_.dot_path.empty()) write_dot(config_.dot_path, graph(), {});
  }

  void words() {
    std::optional<Alphabet> alphabet;
    if (!config_.alphabet.empty()) {
      std::vector<std::string> symbols;
      std::stringstream ss(config_.alphabet);
      for (std::string s; std::getline(ss, s, ',');) symbols.push_back(s);
      alphabet.emplace(std::move(symbols));
    } else if (config_.alphabet_size >= 1) {
      alphabet.emplace(Alphabet::numbered(config_.alphabet_size));
    } else {
      throw UsageError("words needs -n <size> or --alphabet a,b,...");
    }
    const Natural sigma = sigma_count(alphabet->size());
    std::vector<std::string> listed;
    if (!config_.count_only) {
      for (const auto& w : enumerate_distinguished(*alphabet, config_.cap)) listed.push_back(w.render(*alphabet));
    }
    if (config_.format == Format::Json) {
      json doc{{"query", {{"command", "words"}, {"alphabet", alphabet->names()}}}, {"count", natural_json(sigma)}};
      if (!config_.count_only) doc["words"] = listed;
      out_ << doc.dump(2) << '\n';
      return;
    }
    out_ << sigma.str() << '\n';
    for (const auto& w : listed) out_ << w << '\n';
  }

  const CliConfig& config_;
  std::ostream& out_;
  std::optional<DirectedGraph> graph_;
  std::optional<LatinPowerSequence> powers_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Enumerate elementary paths and circuits of a directed graph with latin-matrix powers", "lcdl"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
  app.add_option("--engine", config.engine, "Enumeration engine")
      ->transform(
          CLI::CheckedTransformer(std::map<std::string, Engine>{{"lcdl", Engine::Lcdl}, {"oracle", Engine::Oracle}}))
      ->group("");
  app.add_option("--limit", config.limit, "Abort when a latin power holds more words than this")
      ->check(CLI::PositiveNumber);
  app.add_option("--dot", config.dot_path, "Write the graph as DOT with result arcs highlighted");

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", config.input, "Edge-list graph file")->required(); };
  const auto kinds = CLI::IsMember({"path", "circuit"});

  auto* paths = app.add_subcommand("paths", "Elementary paths of length k between two vertices");
  graph_arg(paths);
  paths->add_option("-i", config.from, "Source vertex")->required();
  paths->add_option("-j", config.to, "Target vertex")->required();
  paths->add_option("-k", config.length, "Number of arcs")->required();

  auto* circuits = app.add_subcommand("circuits", "Elementary circuits of length k through a vertex");
  graph_arg(circuits);
  circuits->add_option("-i", config.from, "Start vertex")->required();
  circuits->add_option("-k", config.length, "Number of arcs")->required();

  auto* hamiltonian = app.add_subcommand("hamiltonian", "All Hamiltonian paths or circuits");
  graph_arg(hamiltonian);
  hamiltonian->add_option("--kind", config.kind, "path or circuit")->check(kinds);

  auto* count = app.add_subcommand("count", "Number of walks of length k (adjacency-matrix power)");
  graph_arg(count);
  count->add_option("-i", config.from, "Source vertex")->required();
  count->add_option("-j", config.to, "Target vertex")->required();
  count->add_option("-k", config.length, "Number of arcs")->required();

  auto* optimal = app.add_subcommand("optimal", "Cheapest or most expensive Hamiltonian path or circuit");
  graph_arg(optimal);
  optimal->add_option("--kind", config.kind, "path or circuit")->check(kinds);
  optimal->add_option("--objective", config.objective, "min or max")->check(CLI::IsMember({"min", "max"}));
  optimal->add_option("--from", config.from, "Start vertex");
  optimal->add_option("--to", config.to, "End vertex (paths only)");

  auto* matrix = app.add_subcommand("matrix", "Print the latin-matrix power L^[k]");
  graph_arg(matrix);
  matrix->add_option("-k", config.length, "Power")->required();

  auto* words = app.add_subcommand("words", "Count or list the distinguished words over an alphabet");
  auto* size_opt = words->add_option("-n", config.alphabet_size, "Alphabet of symbols 1..n")->check(CLI::PositiveNumber);
  words->add_option("--alphabet", config.alphabet, "Comma-separated symbols")->excludes(size_opt);
  words->add_flag("--count-only", config.count_only, "Only print the count");
  words->add_option("--cap", config.cap, "Largest alphabet that may be enumerated");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    Runner(config, out).run();
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const GraphParseError& e) {
    err << "error: " << config.input << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace lcdl::cli
