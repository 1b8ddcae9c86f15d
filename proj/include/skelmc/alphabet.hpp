#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skelmc/word.hpp"

namespace skelmc {

class Alphabet {
 public:
  Alphabet() = default;
  // Throws std::invalid_argument on empty or duplicate labels.
  explicit Alphabet(std::vector<std::string> labels);

  // Binary alphabet {"0","1"} and friends: labels "0".."n-1".
  static Alphabet numeric(std::size_t size);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Symbol s) const { return labels_.at(s); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Symbol> index_of(std::string_view label) const;

  // True when every label is one character, so words print as plain strings.
  bool single_character() const { return single_character_; }

  // Concatenated labels ("0110"); multi-character alphabets join with '.'.
  std::string format(const Word& w) const;
  // Parses a concatenated-label string; requires single_character().
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
  bool single_character_ = true;
};

}  // namespace skelmc
