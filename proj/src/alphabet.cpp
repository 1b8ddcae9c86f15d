#include "skelmc/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace skelmc {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("alphabet must contain at least one symbol");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("alphabet labels must be non-empty");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate alphabet label '" + l + "'");
  }
  single_character_ = std::all_of(labels_.begin(), labels_.end(),
                                  [](const std::string& l) { return l.size() == 1; });
}

Alphabet Alphabet::numeric(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return Alphabet(std::move(labels));
}

std::optional<Symbol> Alphabet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Symbol>(i);
  return std::nullopt;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_character_ && i > 0) out += '.';
    out += labels_.at(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  if (!single_character_)
    throw std::invalid_argument("multi-character alphabet: words must use the list form");
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    auto idx = index_of(std::string_view(&c, 1));
    if (!idx) throw std::invalid_argument(std::string("unknown symbol label '") + c + "'");
    symbols.push_back(*idx);
  }
  return Word(std::move(symbols));
}

}  // namespace skelmc
