#pragma once

#include "lcdl/graph.hpp"
#include "lcdl/languages.hpp"
#include "lcdl/semiring.hpp"

namespace lcdl {

/// 0/1 matrix over the naturals, indexed by vertex declaration order.
Matrix<NaturalSemiring> adjacency_matrix(const DirectedGraph& g);

/// The alphabet of a graph: its vertex names, in declaration order.
AlphabetPtr vertex_alphabet(const DirectedGraph& g);

/// Entry (i, j) is {v_i v_j} when the arc exists and the zero language
/// otherwise. A self-loop gives the simple-cyclic word v_i v_i.
LanguageMatrix latin_matrix(const DirectedGraph& g);
LanguageMatrix latin_matrix(const DirectedGraph& g, AlphabetPtr alphabet);

/// Decodes a word whose symbols are vertex indices.
VertexPath word_to_path(const DistinguishedWord& w);
DistinguishedWord path_to_word(const VertexPath& p, const Alphabet& alphabet);

}  // namespace lcdl
