#pragma once

// Brute-force reference enumeration by depth-first search. Deliberately
// independent of the language semiring and the matrix engine: it only sees
// the graph.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcdl/graph.hpp"

namespace lcdl::oracle {

struct OracleResult {
  bool circuit = false;
  VertexId from = 0;
  VertexId to = 0;
  std::size_t length = 0;
  std::vector<VertexPath> items;  // lexicographic by vertex index
};

/// Simple paths i -> j with exactly k arcs.
OracleResult dfs_elementary_paths(const DirectedGraph& g, VertexId i, VertexId j, std::size_t k);

/// Simple cycles through i with exactly k arcs, written to start at i.
OracleResult dfs_elementary_circuits(const DirectedGraph& g, VertexId i, std::size_t k);

/// All walks of exactly k arcs from i to j.
boost::multiprecision::cpp_int dfs_count_all_paths(const DirectedGraph& g, VertexId i, VertexId j, std::size_t k);

/// Every Hamiltonian path (all (i, j), i != j) / circuit (all starts), sorted.
std::vector<VertexPath> dfs_hamiltonian_paths(const DirectedGraph& g);
std::vector<VertexPath> dfs_hamiltonian_circuits(const DirectedGraph& g);

}  // namespace lcdl::oracle
