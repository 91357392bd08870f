#pragma once

// Latin-matrix powers and everything read off them: elementary paths and
// circuits of a given length, Hamiltonian paths and circuits, maximum-length
// queries and cost-optimal Hamiltonian selection. Walk counting uses powers
// of the adjacency matrix over the naturals.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcdl/graph.hpp"
#include "lcdl/languages.hpp"
#include "lcdl/semiring.hpp"

namespace lcdl {

inline constexpr std::size_t kDefaultWordLimit = 1'000'000;

/// Thrown when a power holds more stored words than the configured limit.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::size_t power, std::size_t words, std::size_t limit);
  std::size_t power() const noexcept { return power_; }
  std::size_t words() const noexcept { return words_; }

 private:
  std::size_t power_;
  std::size_t words_;
};

/// Thrown if L^[n] has a non-zero off-diagonal entry. Cannot happen unless
/// latin composition is broken.
class StructuralViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PowerOptions {
  std::size_t word_limit = kDefaultWordLimit;
};

/// L^[1] .. L^[n], each computed as L * L^[k-1].
class LatinPowerSequence {
 public:
  static LatinPowerSequence compute(const DirectedGraph& g, PowerOptions options = {});

  std::size_t vertex_count() const noexcept { return powers_.front().size(); }
  const AlphabetPtr& alphabet() const noexcept { return powers_.front().semiring().alphabet(); }
  const LanguageMatrix& latin() const noexcept { return powers_.front(); }
  /// 1 <= k <= n.
  const LanguageMatrix& power(std::size_t k) const;
  /// L * L^[n]; zero for every graph.
  LanguageMatrix beyond_last() const;

 private:
  explicit LatinPowerSequence(std::vector<LanguageMatrix> powers) : powers_(std::move(powers)) {}
  std::vector<LanguageMatrix> powers_;
};

enum class QueryKind { Path, Circuit };

struct Query {
  QueryKind kind;
  VertexId from;
  VertexId to;  // equals from for circuits
  std::size_t length;
};

struct EnumerationResult {
  Query query;
  std::vector<VertexPath> items;  // lexicographic by vertex index
};

/// Elementary paths from i to j with exactly k arcs; i != j, 1 <= k <= n-1.
EnumerationResult elementary_paths(const LatinPowerSequence& powers, VertexId i, VertexId j, std::size_t k);

/// Elementary circuits through i with exactly k arcs, starting at i; 1 <= k <= n.
EnumerationResult elementary_circuits(const LatinPowerSequence& powers, VertexId i, std::size_t k);

std::vector<VertexPath> hamiltonian_paths(const LatinPowerSequence& powers);
std::vector<VertexPath> hamiltonian_circuits(const LatinPowerSequence& powers);

/// Longest non-empty elementary path i -> j (or circuit at i when j is absent
/// or equal to i). nullopt when there is none at any length.
std::optional<EnumerationResult> max_length_elementary(const LatinPowerSequence& powers, VertexId i,
                                                       std::optional<VertexId> j = std::nullopt);

/// Number of walks of exactly k arcs from i to j, elementary or not.
Natural count_paths(const DirectedGraph& g, VertexId i, VertexId j, std::size_t k);

enum class Objective { Min, Max };

struct HamiltonianQuery {
  QueryKind kind = QueryKind::Path;
  Objective objective = Objective::Min;
  std::optional<VertexId> from;
  std::optional<VertexId> to;  // paths only
};

struct CostedPath {
  VertexPath path;
  double cost;
};

/// Best Hamiltonian path/circuit by summed arc cost; the first in canonical
/// order wins ties. nullopt when no candidate exists. Throws GraphError when
/// the graph has no costs.
std::optional<CostedPath> optimal_hamiltonian(const DirectedGraph& g, const LatinPowerSequence& powers,
                                              const HamiltonianQuery& query);

}  // namespace lcdl
