#include "lcdl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace lcdl {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    if (end > pos) out.emplace_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::optional<double> parse_decimal(const std::string& token) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string format_decimal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<Arc> arcs,
                             std::optional<std::vector<double>> costs)
    : names_(std::move(vertices)), costs_(std::move(costs)) {
  if (names_.empty()) throw GraphError("graph must have at least one vertex");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw GraphError("vertex names must be non-empty");
    if (!index_.emplace(names_[i], i).second) throw GraphError("duplicate vertex '" + names_[i] + "'");
  }
  const std::size_t n = names_.size();
  if (costs_ && costs_->size() != arcs.size()) {
    throw GraphError("expected one cost per arc: " + std::to_string(arcs.size()) + " arcs, " +
                     std::to_string(costs_->size()) + " costs");
  }

  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });

  arcs_.reserve(arcs.size());
  std::vector<double> sorted_costs;
  for (std::size_t idx : order) {
    const Arc& arc = arcs[idx];
    if (arc.from >= n || arc.to >= n) throw GraphError("arc endpoint outside the vertex list");
    if (!arcs_.empty() && arcs_.back() == arc) {
      throw GraphError("duplicate arc (" + names_[arc.from] + ", " + names_[arc.to] + ")");
    }
    arcs_.push_back(arc);
    if (costs_) sorted_costs.push_back((*costs_)[idx]);
  }
  if (costs_) costs_ = std::move(sorted_costs);

  successors_.assign(n, {});
  arc_slot_.assign(n * n, -1);
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    successors_[arcs_[a].from].push_back(arcs_[a].to);
    arc_slot_[arcs_[a].from * n + arcs_[a].to] = static_cast<std::ptrdiff_t>(a);
  }
}

VertexId DirectedGraph::vertex_index(std::string_view name) const {
  auto found = find_vertex(name);
  if (!found) throw GraphError("unknown vertex '" + std::string(name) + "'");
  return *found;
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DirectedGraph::has_arc(VertexId from, VertexId to) const {
  const std::size_t n = names_.size();
  return from < n && to < n && arc_slot_[from * n + to] >= 0;
}

double DirectedGraph::cost(VertexId from, VertexId to) const {
  if (!costs_) throw GraphError("graph has no arc costs");
  if (!has_arc(from, to)) throw GraphError("no arc between the given vertices");
  return (*costs_)[static_cast<std::size_t>(arc_slot_[from * names_.size() + to])];
}

DirectedGraph parse_graph(std::string_view text) {
  std::optional<std::vector<std::string>> vertices;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Arc> arcs;
  std::vector<double> costs;
  std::map<Arc, std::size_t> arc_lines;
  std::size_t costed = 0;
  std::size_t first_costed_line = 0;
  std::size_t first_bare_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;

    if (!vertices) {
      constexpr std::string_view kHeader = "vertices:";
      if (line.substr(0, kHeader.size()) != kHeader) {
        throw GraphParseError(line_no, "expected 'vertices: ...' before any arc");
      }
      auto names = split_ws(line.substr(kHeader.size()));
      if (names.empty()) throw GraphParseError(line_no, "vertex list is empty");
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], i).second) {
          throw GraphParseError(line_no, "duplicate vertex '" + names[i] + "'");
        }
      }
      vertices = std::move(names);
      continue;
    }

    auto fields = split_ws(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw GraphParseError(line_no, "expected 'source target [cost]', got " + std::to_string(fields.size()) +
                                         " fields");
    }
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw GraphParseError(line_no, "unknown vertex '" + name + "'");
      return it->second;
    };
    Arc arc{lookup(fields[0]), lookup(fields[1])};
    if (auto seen = arc_lines.find(arc); seen != arc_lines.end()) {
      throw GraphParseError(line_no, "duplicate arc (" + fields[0] + ", " + fields[1] +
                                         "), first declared on line " + std::to_string(seen->second));
    }
    if (fields.size() == 3) {
      auto value = parse_decimal(fields[2]);
      if (!value) throw GraphParseError(line_no, "malformed cost '" + fields[2] + "'");
      costs.push_back(*value);
      if (costed++ == 0) first_costed_line = line_no;
    } else {
      costs.push_back(0.0);
      if (first_bare_line == 0) first_bare_line = line_no;
    }
    arcs.push_back(arc);
    arc_lines.emplace(arc, line_no);
  }

  if (!vertices) throw GraphParseError(line_no, "missing 'vertices: ...' line");
  if (costed != 0 && costed != arcs.size()) {
    throw GraphParseError(std::max(first_costed_line, first_bare_line),
                          "costs must be given for all arcs or for none (line " +
                              std::to_string(first_costed_line) + " has a cost, line " +
                              std::to_string(first_bare_line) + " does not)");
  }
  std::optional<std::vector<double>> cost_list;
  if (costed != 0) cost_list = std::move(costs);
  return DirectedGraph(std::move(*vertices), std::move(arcs), std::move(cost_list));
}

DirectedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const DirectedGraph& g) {
  std::string out = "vertices:";
  for (const auto& name : g.vertex_names()) out += ' ' + name;
  out += '\n';
  for (const auto& arc : g.arcs()) {
    out += g.vertex_name(arc.from) + ' ' + g.vertex_name(arc.to);
    if (g.has_costs()) out += ' ' + format_decimal(g.cost(arc.from, arc.to));
    out += '\n';
  }
  return out;
}

bool is_walk(const DirectedGraph& g, const VertexPath& p) {
  if (p.vertices.size() < 2) return false;
  for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
    if (!g.has_arc(p.vertices[t], p.vertices[t + 1])) return false;
  }
  return true;
}

namespace {
bool distinct(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}
}  // namespace

bool is_elementary_path(const VertexPath& p) { return p.vertices.size() >= 2 && distinct(p.vertices); }

bool is_elementary_circuit(const VertexPath& p) {
  if (p.vertices.size() < 2 || p.vertices.front() != p.vertices.back()) return false;
  return distinct({p.vertices.begin(), p.vertices.end() - 1});
}

double path_cost(const DirectedGraph& g, const VertexPath& p, CostAggregation aggregation) {
  if (!g.has_costs()) throw GraphError("graph has no arc costs");
  if (!is_walk(g, p)) throw GraphError("sequence is not a path in the graph");
  double total = aggregation == CostAggregation::Sum ? 0.0 : 1.0;
  for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t) {
    double c = g.cost(p.vertices[t], p.vertices[t + 1]);
    total = aggregation == CostAggregation::Sum ? total + c : total * c;
  }
  return total;
}

std::string render_path(const DirectedGraph& g, const VertexPath& p) {
  std::string out;
  for (std::size_t t = 0; t < p.vertices.size(); ++t) {
    if (t > 0) out += '-';
    out += g.vertex_name(p.vertices[t]);
  }
  return out;
}

VertexPath path_from_names(const DirectedGraph& g, const std::vector<std::string>& names) {
  VertexPath p;
  p.vertices.reserve(names.size());
  for (const auto& name : names) p.vertices.push_back(g.vertex_index(name));
  return p;
}

}  // namespace lcdl
