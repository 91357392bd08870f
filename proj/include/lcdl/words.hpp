#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lcdl/semiring.hpp"

namespace lcdl {

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

using Symbol = std::uint16_t;

/// Membership sets in latin composition are fixed-size bitsets, so
/// alphabets are bounded.
inline constexpr std::size_t kMaxAlphabetSize = 256;

/// Ordered list of distinct symbol names. Symbols are addressed by index.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  /// Symbols named "1".."n".
  static Alphabet numbered(std::size_t n);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& name(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& names() const noexcept { return symbols_; }
  Symbol index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
};

enum class WordKind { Empty, Simple, SimpleCyclic };
enum class WordClass { Empty, Simple, SimpleCyclic, NotDistinguished };

/// Classifies a raw symbol sequence. Throws AlphabetError for symbols outside
/// the alphabet.
WordClass classify(std::span<const Symbol> seq, const Alphabet& alphabet);
WordClass classify(const std::vector<std::string>& names, const Alphabet& alphabet);

/// A word that is empty, simple (pairwise distinct symbols), or simple-cyclic
/// (a simple word followed by its first symbol). Nothing else is representable.
class DistinguishedWord {
 public:
  /// The empty word.
  DistinguishedWord() = default;

  /// Throws AlphabetError if seq is not a distinguished word over alphabet.
  static DistinguishedWord from_symbols(std::vector<Symbol> seq, const Alphabet& alphabet);
  static DistinguishedWord from_names(const std::vector<std::string>& names,
                                      const Alphabet& alphabet);

  WordKind kind() const noexcept { return kind_; }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t length() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  /// Symbols joined by "-", or "^" for the empty word.
  std::string render(const Alphabet& alphabet) const;

  friend bool operator==(const DistinguishedWord&, const DistinguishedWord&) = default;
  friend auto operator<=>(const DistinguishedWord& a, const DistinguishedWord& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  DistinguishedWord(std::vector<Symbol> symbols, WordKind kind)
      : symbols_(std::move(symbols)), kind_(kind) {}

  friend DistinguishedWord latin_compose(const DistinguishedWord&, const DistinguishedWord&);

  std::vector<Symbol> symbols_;
  WordKind kind_ = WordKind::Empty;
};

/// Latin composition x o y. The empty word and every simple-cyclic word
/// absorb. For simple x = a1..ak and y = b1..br with ak == b1:
///   - tail of y disjoint from x         -> a1..ak b2..br        (simple)
///   - br == a1, interior of y disjoint  -> a1..ak b2..b(r-1) a1 (cyclic)
/// and the empty word otherwise. For x == y == "a" the first case wins.
DistinguishedWord latin_compose(const DistinguishedWord& x, const DistinguishedWord& y);

/// sigma_n = 1 + 2 n! + 2 sum_{k=1}^{n-1} n!/(n-k)!
Natural sigma_count(std::size_t n);

inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// Every distinguished word over the alphabet (the empty word included), in
/// canonical order. Throws SizeError when the alphabet exceeds cap.
std::vector<DistinguishedWord> enumerate_distinguished(const Alphabet& alphabet,
                                                       std::size_t cap = kDefaultEnumerationCap);

}  // namespace lcdl
