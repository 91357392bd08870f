#include "lcdl/graph_matrices.hpp"

namespace lcdl {

Matrix<NaturalSemiring> adjacency_matrix(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Natural> entries(n * n, 0);
  for (const auto& arc : g.arcs()) entries[arc.from * n + arc.to] = 1;
  return Matrix<NaturalSemiring>(NaturalSemiring{}, n, std::move(entries));
}

AlphabetPtr vertex_alphabet(const DirectedGraph& g) { return std::make_shared<const Alphabet>(g.vertex_names()); }

LanguageMatrix latin_matrix(const DirectedGraph& g) { return latin_matrix(g, vertex_alphabet(g)); }

LanguageMatrix latin_matrix(const DirectedGraph& g, AlphabetPtr alphabet) {
  if (!alphabet || alphabet->names() != g.vertex_names()) {
    throw AlphabetError("latin matrix alphabet must be the graph's vertex list");
  }
  const std::size_t n = g.vertex_count();
  std::vector<DistinguishedLanguage> entries(n * n, lang_zero(alphabet));
  for (const auto& arc : g.arcs()) {
    auto word = DistinguishedWord::from_symbols({static_cast<Symbol>(arc.from), static_cast<Symbol>(arc.to)},
                                                *alphabet);
    entries[arc.from * n + arc.to] = DistinguishedLanguage(alphabet, {std::move(word)});
  }
  return LanguageMatrix(LanguageSemiring(alphabet), n, std::move(entries));
}

VertexPath word_to_path(const DistinguishedWord& w) {
  return VertexPath{{w.symbols().begin(), w.symbols().end()}};
}

DistinguishedWord path_to_word(const VertexPath& p, const Alphabet& alphabet) {
  std::vector<Symbol> seq;
  seq.reserve(p.vertices.size());
  for (VertexId v : p.vertices) {
    if (v >= alphabet.size()) throw AlphabetError("vertex index outside the alphabet");
    seq.push_back(static_cast<Symbol>(v));
  }
  return DistinguishedWord::from_symbols(std::move(seq), alphabet);
}

}  // namespace lcdl
