#include "lcdl/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace lcdl::oracle {

namespace {

void check_vertex(const DirectedGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw std::out_of_range("oracle: vertex index out of range");
}

// Extends `trail` by `remaining` arcs without revisiting a vertex, except that
// the final step may return to trail.front() when `closing` is set.
void extend(const DirectedGraph& g, std::vector<VertexId>& trail, std::vector<char>& visited, std::size_t remaining,
            VertexId goal, bool closing, std::vector<VertexPath>& out) {
  const VertexId here = trail.back();
  if (remaining == 0) {
    if (here == goal) out.push_back(VertexPath{trail});
    return;
  }
  for (VertexId next : g.successors(here)) {
    if (visited[next]) {
      if (closing && remaining == 1 && next == trail.front()) {
        trail.push_back(next);
        out.push_back(VertexPath{trail});
        trail.pop_back();
      }
      continue;
    }
    visited[next] = 1;
    trail.push_back(next);
    extend(g, trail, visited, remaining - 1, goal, closing, out);
    trail.pop_back();
    visited[next] = 0;
  }
}

void validate(const DirectedGraph& g, const OracleResult& r) {
  for (const auto& p : r.items) {
    const bool ok = is_walk(g, p) && p.length() == r.length && p.source() == r.from && p.target() == r.to &&
                    (r.circuit ? is_elementary_circuit(p) : is_elementary_path(p));
    if (!ok) throw std::logic_error("oracle produced an invalid item: " + render_path(g, p));
  }
}

}  // namespace

OracleResult dfs_elementary_paths(const DirectedGraph& g, VertexId i, VertexId j, std::size_t k) {
  check_vertex(g, i);
  check_vertex(g, j);
  OracleResult result{false, i, j, k, {}};
  if (i == j || k == 0 || k >= g.vertex_count()) return result;
  std::vector<VertexId> trail{i};
  std::vector<char> visited(g.vertex_count(), 0);
  visited[i] = 1;
  extend(g, trail, visited, k, j, false, result.items);
  std::sort(result.items.begin(), result.items.end());
  validate(g, result);
  return result;
}

OracleResult dfs_elementary_circuits(const DirectedGraph& g, VertexId i, std::size_t k) {
  check_vertex(g, i);
  OracleResult result{true, i, i, k, {}};
  if (k == 0 || k > g.vertex_count()) return result;
  std::vector<VertexId> trail{i};
  std::vector<char> visited(g.vertex_count(), 0);
  visited[i] = 1;
  // Every interior step must land on an unvisited vertex; only the last may close.
  extend(g, trail, visited, k, static_cast<VertexId>(-1), true, result.items);
  std::sort(result.items.begin(), result.items.end());
  validate(g, result);
  return result;
}

boost::multiprecision::cpp_int dfs_count_all_paths(const DirectedGraph& g, VertexId i, VertexId j, std::size_t k) {
  check_vertex(g, i);
  check_vertex(g, j);
  std::map<std::pair<VertexId, std::size_t>, boost::multiprecision::cpp_int> memo;
  auto walks = [&](auto&& self, VertexId from, std::size_t remaining) -> boost::multiprecision::cpp_int {
    if (remaining == 0) return from == j ? 1 : 0;
    auto key = std::make_pair(from, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    boost::multiprecision::cpp_int total = 0;
    for (VertexId next : g.successors(from)) total += self(self, next, remaining - 1);
    memo.emplace(key, total);
    return total;
  };
  return walks(walks, i, k);
}

std::vector<VertexPath> dfs_hamiltonian_paths(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexPath> out;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      if (i == j) continue;
      auto r = dfs_elementary_paths(g, i, j, n - 1);
      out.insert(out.end(), r.items.begin(), r.items.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPath> dfs_hamiltonian_circuits(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexPath> out;
  for (VertexId i = 0; i < n; ++i) {
    auto r = dfs_elementary_circuits(g, i, n);
    out.insert(out.end(), r.items.begin(), r.items.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lcdl::oracle
