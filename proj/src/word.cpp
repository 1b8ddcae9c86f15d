#include "skelmc/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace skelmc {

Word Word::suffix(std::size_t k) const {
  if (k > size()) throw std::out_of_range("suffix longer than word");
  return Word(std::vector<Symbol>(symbols_.end() - static_cast<std::ptrdiff_t>(k), symbols_.end()));
}

Word Word::prefix(std::size_t k) const {
  if (k > size()) throw std::out_of_range("prefix longer than word");
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(k)));
}

bool Word::ends_with(const Word& tail) const {
  if (tail.size() > size()) return false;
  return std::equal(tail.symbols_.begin(), tail.symbols_.end(),
                    symbols_.end() - static_cast<std::ptrdiff_t>(tail.size()));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Symbol> out = symbols_;
  out.insert(out.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return Word(std::move(out));
}

Word Word::appended(Symbol a) const {
  std::vector<Symbol> out = symbols_;
  out.push_back(a);
  return Word(std::move(out));
}

Word Word::prepended(Symbol a) const {
  std::vector<Symbol> out;
  out.reserve(size() + 1);
  out.push_back(a);
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out));
}

bool context_tree_less(const Word& lhs, const Word& rhs) {
  auto l = lhs.symbols();
  auto r = rhs.symbols();
  return std::lexicographical_compare(l.rbegin(), l.rend(), r.rbegin(), r.rend());
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t rank(const Word& w, std::size_t alphabet_size) {
  std::uint64_t index = 0;
  for (Symbol s : w.symbols()) index = index * alphabet_size + s;
  return index;
}

Word unrank(std::uint64_t index, std::size_t length, std::size_t alphabet_size) {
  std::vector<Symbol> symbols(length);
  for (std::size_t i = length; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(index % alphabet_size);
    index /= alphabet_size;
  }
  return Word(std::move(symbols));
}

}  // namespace skelmc
