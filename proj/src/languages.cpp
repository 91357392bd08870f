#include "lcdl/languages.hpp"

#include <algorithm>
#include <iterator>

namespace lcdl {

namespace {

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_alphabet(const DistinguishedLanguage& a, const DistinguishedLanguage& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) {
    throw AlphabetError("languages are over different alphabets");
  }
}

void canonicalize(std::vector<DistinguishedWord>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

DistinguishedLanguage::DistinguishedLanguage(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetError("language requires an alphabet");
}

DistinguishedLanguage::DistinguishedLanguage(AlphabetPtr alphabet, std::vector<DistinguishedWord> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (!alphabet_) throw AlphabetError("language requires an alphabet");
  std::erase_if(words_, [](const DistinguishedWord& w) { return w.empty(); });
  for (const auto& w : words_) {
    for (Symbol s : w.symbols()) {
      if (s >= alphabet_->size()) throw AlphabetError("word uses a symbol outside the language's alphabet");
    }
  }
  canonicalize(words_);
}

DistinguishedLanguage DistinguishedLanguage::from_names(
    AlphabetPtr alphabet, std::initializer_list<std::vector<std::string>> words) {
  std::vector<DistinguishedWord> parsed;
  for (const auto& names : words) parsed.push_back(DistinguishedWord::from_names(names, *alphabet));
  return {std::move(alphabet), std::move(parsed)};
}

bool DistinguishedLanguage::contains(const DistinguishedWord& w) const {
  if (w.empty()) return true;
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool DistinguishedLanguage::all_simple() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](const DistinguishedWord& w) { return w.kind() == WordKind::Simple; });
}

std::string DistinguishedLanguage::render() const {
  if (words_.empty()) return "^";
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0) out += ", ";
    out += words_[i].render(*alphabet_);
  }
  out += '}';
  return out;
}

bool operator==(const DistinguishedLanguage& a, const DistinguishedLanguage& b) {
  return same_alphabet(a.alphabet_, b.alphabet_) && a.words_ == b.words_;
}

DistinguishedLanguage lang_union(const DistinguishedLanguage& a, const DistinguishedLanguage& b) {
  require_same_alphabet(a, b);
  std::vector<DistinguishedWord> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                 std::back_inserter(merged));
  return {a.alphabet(), std::move(merged)};
}

DistinguishedLanguage lang_compose(const DistinguishedLanguage& a, const DistinguishedLanguage& b) {
  require_same_alphabet(a, b);
  std::vector<DistinguishedWord> out;
  for (const auto& x : a.words()) {
    for (const auto& y : b.words()) {
      auto w = latin_compose(x, y);
      if (!w.empty()) out.push_back(std::move(w));
    }
  }
  return {a.alphabet(), std::move(out)};
}

DistinguishedLanguage lang_zero(AlphabetPtr alphabet) { return DistinguishedLanguage(std::move(alphabet)); }

DistinguishedLanguage lang_one(AlphabetPtr alphabet) {
  if (!alphabet) throw AlphabetError("language requires an alphabet");
  std::vector<DistinguishedWord> singles;
  singles.reserve(alphabet->size());
  for (std::size_t s = 0; s < alphabet->size(); ++s) {
    singles.push_back(DistinguishedWord::from_symbols({static_cast<Symbol>(s)}, *alphabet));
  }
  return {std::move(alphabet), std::move(singles)};
}

LanguageSemiring::LanguageSemiring(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetError("semiring requires an alphabet");
}

bool operator==(const LanguageSemiring& a, const LanguageSemiring& b) {
  return same_alphabet(a.alphabet_, b.alphabet_);
}

std::size_t total_words(const LanguageMatrix& m) {
  std::size_t total = 0;
  for (const auto& entry : m.entries()) total += entry.size();
  return total;
}

}  // namespace lcdl
