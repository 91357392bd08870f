#include "lcdl/engine.hpp"

#include <algorithm>
#include <string>

#include "lcdl/graph_matrices.hpp"

namespace lcdl {

namespace {

void require_vertex(const LatinPowerSequence& powers, VertexId v) {
  if (v >= powers.vertex_count()) {
    throw QueryError("vertex index " + std::to_string(v) + " out of range for a graph with " +
                     std::to_string(powers.vertex_count()) + " vertices");
  }
}

std::vector<VertexPath> decode(const DistinguishedLanguage& entry) {
  std::vector<VertexPath> out;
  out.reserve(entry.size());
  for (const auto& w : entry.words()) out.push_back(word_to_path(w));
  return out;
}

}  // namespace

ResourceLimitError::ResourceLimitError(std::size_t power, std::size_t words, std::size_t limit)
    : std::runtime_error("latin power " + std::to_string(power) + " holds " + std::to_string(words) +
                         " words, above the limit of " + std::to_string(limit)),
      power_(power),
      words_(words) {}

LatinPowerSequence LatinPowerSequence::compute(const DirectedGraph& g, PowerOptions options) {
  const std::size_t n = g.vertex_count();
  std::vector<LanguageMatrix> powers;
  powers.reserve(n);
  powers.push_back(latin_matrix(g));
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) powers.push_back(multiply(powers.front(), powers.back()));
    const std::size_t words = total_words(powers.back());
    if (words > options.word_limit) throw ResourceLimitError(k, words, options.word_limit);
  }

  const auto& last = powers.back();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !last(i, j).is_zero()) {
        throw StructuralViolation("L^[" + std::to_string(n) + "] has a non-zero off-diagonal entry at (" +
                                  std::to_string(i + 1) + ", " + std::to_string(j + 1) + "): " +
                                  last(i, j).render());
      }
    }
  }
  return LatinPowerSequence(std::move(powers));
}

const LanguageMatrix& LatinPowerSequence::power(std::size_t k) const {
  if (k == 0 || k > powers_.size()) {
    throw QueryError("power " + std::to_string(k) + " outside 1.." + std::to_string(powers_.size()));
  }
  return powers_[k - 1];
}

LanguageMatrix LatinPowerSequence::beyond_last() const { return multiply(powers_.front(), powers_.back()); }

EnumerationResult elementary_paths(const LatinPowerSequence& powers, VertexId i, VertexId j, std::size_t k) {
  require_vertex(powers, i);
  require_vertex(powers, j);
  if (i == j) throw QueryError("source equals target; enumerate elementary circuits instead");
  const std::size_t n = powers.vertex_count();
  if (k < 1 || k + 1 > n) {
    throw QueryError("path length " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  }
  return {{QueryKind::Path, i, j, k}, decode(powers.power(k)(i, j))};
}

EnumerationResult elementary_circuits(const LatinPowerSequence& powers, VertexId i, std::size_t k) {
  require_vertex(powers, i);
  const std::size_t n = powers.vertex_count();
  if (k < 1 || k > n) throw QueryError("circuit length " + std::to_string(k) + " outside 1.." + std::to_string(n));
  return {{QueryKind::Circuit, i, i, k}, decode(powers.power(k)(i, i))};
}

std::vector<VertexPath> hamiltonian_paths(const LatinPowerSequence& powers) {
  const std::size_t n = powers.vertex_count();
  std::vector<VertexPath> out;
  if (n < 2) return out;
  const auto& m = powers.power(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto decoded = decode(m(i, j));
      out.insert(out.end(), decoded.begin(), decoded.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPath> hamiltonian_circuits(const LatinPowerSequence& powers) {
  const std::size_t n = powers.vertex_count();
  const auto& m = powers.power(n);
  std::vector<VertexPath> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto decoded = decode(m(i, i));
    out.insert(out.end(), decoded.begin(), decoded.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EnumerationResult> max_length_elementary(const LatinPowerSequence& powers, VertexId i,
                                                       std::optional<VertexId> j) {
  require_vertex(powers, i);
  const std::size_t n = powers.vertex_count();
  if (!j || *j == i) {
    for (std::size_t k = n; k >= 1; --k) {
      auto result = elementary_circuits(powers, i, k);
      if (!result.items.empty()) return result;
    }
    return std::nullopt;
  }
  require_vertex(powers, *j);
  for (std::size_t k = n - 1; k >= 1; --k) {
    auto result = elementary_paths(powers, i, *j, k);
    if (!result.items.empty()) return result;
  }
  return std::nullopt;
}

Natural count_paths(const DirectedGraph& g, VertexId i, VertexId j, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (i >= n || j >= n) throw QueryError("vertex index out of range");
  if (k < 1) throw QueryError("walk length must be at least 1");
  return power_left(adjacency_matrix(g), k)(i, j);
}

std::optional<CostedPath> optimal_hamiltonian(const DirectedGraph& g, const LatinPowerSequence& powers,
                                              const HamiltonianQuery& query) {
  if (!g.has_costs()) throw GraphError("graph has no arc costs");
  if (query.from) require_vertex(powers, *query.from);
  if (query.to) require_vertex(powers, *query.to);
  if (query.kind == QueryKind::Circuit && query.to && query.to != query.from) {
    throw QueryError("a circuit ends where it starts; give only a start vertex");
  }

  const auto candidates =
      query.kind == QueryKind::Path ? hamiltonian_paths(powers) : hamiltonian_circuits(powers);
  std::optional<CostedPath> best;
  for (const auto& p : candidates) {
    if (query.from && p.source() != *query.from) continue;
    if (query.to && p.target() != *query.to) continue;
    const double c = path_cost(g, p, CostAggregation::Sum);
    const bool better = !best || (query.objective == Objective::Min ? c < best->cost : c > best->cost);
    if (better) best = CostedPath{p, c};
  }
  return best;
}

}  // namespace lcdl
