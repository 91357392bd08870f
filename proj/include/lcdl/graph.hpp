#pragma once

// Directed graphs with optional real arc costs, plus the edge-list text format.
//
//   # comment
//   vertices: v1 v2 v3
//   v1 v2 4
//   v2 v3 1.5
//
// Vertex order is declaration order and fixes matrix indices. Either every
// arc carries a cost or none does.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lcdl {

using VertexId = std::size_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GraphParseError : public GraphError {
 public:
  GraphParseError(std::size_t line, const std::string& message)
      : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Arc {
  VertexId from;
  VertexId to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sequence of at least two vertices; length counts arcs.
struct VertexPath {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId source() const { return vertices.front(); }
  VertexId target() const { return vertices.back(); }

  friend auto operator<=>(const VertexPath&, const VertexPath&) = default;
};

class DirectedGraph {
 public:
  /// costs, when given, are parallel to arcs. Throws GraphError on duplicate
  /// vertices or arcs, unknown endpoints or a cost count mismatch.
  DirectedGraph(std::vector<std::string> vertices, std::vector<Arc> arcs,
                std::optional<std::vector<double>> costs = std::nullopt);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  VertexId vertex_index(std::string_view name) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  /// Sorted by (source index, target index).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  bool has_arc(VertexId from, VertexId to) const;
  const std::vector<VertexId>& successors(VertexId v) const { return successors_.at(v); }

  bool has_costs() const noexcept { return costs_.has_value(); }
  /// Throws GraphError if the graph has no costs or the arc does not exist.
  double cost(VertexId from, VertexId to) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Arc> arcs_;
  std::optional<std::vector<double>> costs_;
  std::vector<std::vector<VertexId>> successors_;
  std::vector<std::ptrdiff_t> arc_slot_;  // n*n, -1 when absent
};

DirectedGraph parse_graph(std::string_view text);
DirectedGraph read_graph_file(const std::string& path);

/// Same format as parse_graph; costs print in shortest round-trip form.
std::string serialize_graph(const DirectedGraph& g);

/// Every consecutive pair is an arc and the path has at least one arc.
bool is_walk(const DirectedGraph& g, const VertexPath& p);
bool is_elementary_path(const VertexPath& p);
bool is_elementary_circuit(const VertexPath& p);

enum class CostAggregation { Sum, Product };

/// Aggregates arc costs along p (sum by default).
double path_cost(const DirectedGraph& g, const VertexPath& p,
                 CostAggregation aggregation = CostAggregation::Sum);

/// Vertex names joined by "-".
std::string render_path(const DirectedGraph& g, const VertexPath& p);
VertexPath path_from_names(const DirectedGraph& g, const std::vector<std::string>& names);

}  // namespace lcdl
