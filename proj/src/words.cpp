#include "lcdl/words.hpp"

#include <algorithm>
#include <bitset>

namespace lcdl {

namespace {

using SymbolSet = std::bitset<kMaxAlphabetSize>;

bool pairwise_distinct(std::span<const Symbol> seq) {
  SymbolSet seen;
  for (Symbol s : seq) {
    if (seen.test(s)) return false;
    seen.set(s);
  }
  return true;
}

WordClass classify_indices(std::span<const Symbol> seq) {
  if (seq.empty()) return WordClass::Empty;
  if (pairwise_distinct(seq)) return WordClass::Simple;
  if (seq.size() >= 2 && seq.front() == seq.back() && pairwise_distinct(seq.first(seq.size() - 1))) {
    return WordClass::SimpleCyclic;
  }
  return WordClass::NotDistinguished;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw AlphabetError("alphabet must contain at least one symbol");
  if (symbols_.size() > kMaxAlphabetSize) {
    throw AlphabetError("alphabet has " + std::to_string(symbols_.size()) +
                        " symbols; at most " + std::to_string(kMaxAlphabetSize) + " are supported");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i], static_cast<Symbol>(i)).second) {
      throw AlphabetError("duplicate symbol '" + symbols_[i] + "' in alphabet");
    }
  }
}

Alphabet Alphabet::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

Symbol Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw AlphabetError("symbol '" + std::string(name) + "' is not in the alphabet");
  return it->second;
}

bool Alphabet::contains(std::string_view name) const { return index_.contains(std::string(name)); }

WordClass classify(std::span<const Symbol> seq, const Alphabet& alphabet) {
  for (Symbol s : seq) {
    if (s >= alphabet.size()) {
      throw AlphabetError("symbol index " + std::to_string(s) + " is outside an alphabet of size " +
                          std::to_string(alphabet.size()));
    }
  }
  return classify_indices(seq);
}

WordClass classify(const std::vector<std::string>& names, const Alphabet& alphabet) {
  std::vector<Symbol> seq;
  seq.reserve(names.size());
  for (const auto& name : names) seq.push_back(alphabet.index_of(name));
  return classify_indices(seq);
}

DistinguishedWord DistinguishedWord::from_symbols(std::vector<Symbol> seq, const Alphabet& alphabet) {
  switch (classify(seq, alphabet)) {
    case WordClass::Empty:
      return {};
    case WordClass::Simple:
      return {std::move(seq), WordKind::Simple};
    case WordClass::SimpleCyclic:
      return {std::move(seq), WordKind::SimpleCyclic};
    case WordClass::NotDistinguished:
      break;
  }
  throw AlphabetError("symbol sequence is not a distinguished word");
}

DistinguishedWord DistinguishedWord::from_names(const std::vector<std::string>& names,
                                                const Alphabet& alphabet) {
  std::vector<Symbol> seq;
  seq.reserve(names.size());
  for (const auto& name : names) seq.push_back(alphabet.index_of(name));
  return from_symbols(std::move(seq), alphabet);
}

std::string DistinguishedWord::render(const Alphabet& alphabet) const {
  if (symbols_.empty()) return "^";
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0) out += '-';
    out += alphabet.name(symbols_[i]);
  }
  return out;
}

DistinguishedWord latin_compose(const DistinguishedWord& x, const DistinguishedWord& y) {
  if (x.kind_ != WordKind::Simple || y.kind_ != WordKind::Simple) return {};
  const auto& a = x.symbols_;
  const auto& b = y.symbols_;
  if (a.back() != b.front()) return {};

  SymbolSet in_x;
  for (Symbol s : a) in_x.set(s);

  // b2..b(r-1) must avoid x in both cases; br decides between them.
  for (std::size_t t = 1; t + 1 < b.size(); ++t) {
    if (in_x.test(b[t])) return {};
  }
  const bool tail_free = b.size() == 1 || !in_x.test(b.back());

  std::vector<Symbol> out;
  out.reserve(a.size() + b.size() - 1);
  out.insert(out.end(), a.begin(), a.end());
  if (tail_free) {
    out.insert(out.end(), b.begin() + 1, b.end());
    return {std::move(out), WordKind::Simple};
  }
  if (b.back() == a.front()) {
    out.insert(out.end(), b.begin() + 1, b.end() - 1);
    out.push_back(a.front());
    return {std::move(out), WordKind::SimpleCyclic};
  }
  return {};
}

Natural sigma_count(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sigma_count requires n >= 1");
  Natural factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  // n!/(n-k)! for k = 1..n-1 is the falling factorial n(n-1)...(n-k+1).
  Natural falling_sum = 0;
  Natural falling = 1;
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    falling *= (n - k + 1);
    falling_sum += falling;
  }
  return 1 + 2 * factorial + 2 * falling_sum;
}

std::vector<DistinguishedWord> enumerate_distinguished(const Alphabet& alphabet, std::size_t cap) {
  const std::size_t n = alphabet.size();
  if (n > cap) {
    throw SizeError("alphabet of size " + std::to_string(n) + " exceeds the enumeration cap of " +
                    std::to_string(cap));
  }
  std::vector<DistinguishedWord> out;
  out.emplace_back();
  std::vector<Symbol> prefix;
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self) -> void {
    for (std::size_t s = 0; s < n; ++s) {
      if (used[s]) continue;
      used[s] = true;
      prefix.push_back(static_cast<Symbol>(s));
      out.push_back(DistinguishedWord::from_symbols(prefix, alphabet));
      auto cyclic = prefix;
      cyclic.push_back(prefix.front());
      out.push_back(DistinguishedWord::from_symbols(std::move(cyclic), alphabet));
      self(self);
      prefix.pop_back();
      used[s] = false;
    }
  };
  extend(extend);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lcdl
