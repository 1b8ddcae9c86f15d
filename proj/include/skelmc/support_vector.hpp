#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "skelmc/word.hpp"

namespace skelmc {

// Zero/positive pattern of one row of a transition kernel: bit a is set iff
// symbol a may follow the context.
class SupportVector {
 public:
  SupportVector() = default;
  explicit SupportVector(std::size_t size, bool value = false) : bits_(size, value) {}
  SupportVector(std::initializer_list<int> bits) {
    for (int b : bits) bits_.push_back(b != 0);
  }

  std::size_t size() const { return bits_.size(); }
  bool test(Symbol a) const { return bits_[a]; }
  void set(Symbol a, bool value = true) { bits_[a] = value; }

  bool any() const;
  bool all() const;
  std::size_t count() const;

  // "10" for [1,0].
  std::string to_string() const;

  friend bool operator==(const SupportVector&, const SupportVector&) = default;
  friend auto operator<=>(const SupportVector& l, const SupportVector& r) { return l.bits_ <=> r.bits_; }

 private:
  std::vector<bool> bits_;
};

}  // namespace skelmc
