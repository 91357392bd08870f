#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "lcdl/semiring.hpp"
#include "lcdl/words.hpp"

namespace lcdl {

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A finite set of distinguished words over a fixed alphabet. The empty word
/// belongs to every language implicitly and is never stored, so the language
/// with no stored words is {^}, the semiring zero. Stored words are kept
/// sorted and unique.
class DistinguishedLanguage {
 public:
  explicit DistinguishedLanguage(AlphabetPtr alphabet);
  DistinguishedLanguage(AlphabetPtr alphabet, std::vector<DistinguishedWord> words);

  /// Convenience: each word is given as symbol names, e.g. {{"a","b"}, {"c"}}.
  static DistinguishedLanguage from_names(AlphabetPtr alphabet,
                                          std::initializer_list<std::vector<std::string>> words);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<DistinguishedWord>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool is_zero() const noexcept { return words_.empty(); }
  bool contains(const DistinguishedWord& w) const;
  bool all_simple() const;

  /// "{w1, w2}" or "^" for the zero language.
  std::string render() const;

  friend bool operator==(const DistinguishedLanguage& a, const DistinguishedLanguage& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<DistinguishedWord> words_;
};

DistinguishedLanguage lang_union(const DistinguishedLanguage& a, const DistinguishedLanguage& b);

/// { x o y | x in a, y in b }, empty-word results dropped.
DistinguishedLanguage lang_compose(const DistinguishedLanguage& a, const DistinguishedLanguage& b);

DistinguishedLanguage lang_zero(AlphabetPtr alphabet);

/// All single-symbol words. Acts as a two-sided identity only on languages of
/// simple words: a simple-cyclic word c has a o c = ^ for every symbol a.
DistinguishedLanguage lang_one(AlphabetPtr alphabet);

/// (languages, union, latin composition, {^}, alphabet).
class LanguageSemiring {
 public:
  using value_type = DistinguishedLanguage;
  static constexpr bool is_idempotent = true;
  static constexpr bool is_commutative = false;

  explicit LanguageSemiring(AlphabetPtr alphabet);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  value_type zero() const { return lang_zero(alphabet_); }
  value_type one() const { return lang_one(alphabet_); }
  value_type add(const value_type& a, const value_type& b) const { return lang_union(a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return lang_compose(a, b); }

  friend bool operator==(const LanguageSemiring& a, const LanguageSemiring& b);

 private:
  AlphabetPtr alphabet_;
};

using LanguageMatrix = Matrix<LanguageSemiring>;

/// Sum of stored words over all entries.
std::size_t total_words(const LanguageMatrix& m);

}  // namespace lcdl
