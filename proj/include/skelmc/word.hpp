#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skelmc {

using Symbol = std::uint32_t;

// Finite symbol sequence. Position 0 is the oldest symbol, position size()-1
// the most recent one, so "10" reads "emitted 1, then 0".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol newest() const { return symbols_.back(); }
  std::span<const Symbol> symbols() const { return symbols_; }

  // Last k symbols; suffix(0) is the empty word.
  Word suffix(std::size_t k) const;
  // First k symbols.
  Word prefix(std::size_t k) const;
  Word drop_oldest() const { return suffix(size() == 0 ? 0 : size() - 1); }
  bool ends_with(const Word& tail) const;

  Word operator+(const Word& rhs) const;
  Word appended(Symbol a) const;
  Word prepended(Symbol a) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Orders words by their most recent symbol first, then by the next older one,
// with a proper suffix sorting before its extensions. This is the depth-first
// order of a context tree read from the root.
bool context_tree_less(const Word& lhs, const Word& rhs);

// |A|^length, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent);

// Lexicographic rank over A^|w| with the oldest symbol most significant.
std::uint64_t rank(const Word& w, std::size_t alphabet_size);
Word unrank(std::uint64_t index, std::size_t length, std::size_t alphabet_size);

// Index arithmetic on A^L: drop the oldest symbol of state u and append a.
// `tail_space` is |A|^(L-1).
inline std::uint64_t shift_index(std::uint64_t u, Symbol a, std::uint64_t tail_space,
                                 std::size_t alphabet_size) {
  return (u % tail_space) * alphabet_size + a;
}

}  // namespace skelmc
