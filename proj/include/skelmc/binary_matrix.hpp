#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skelmc/op_counter.hpp"
#include "skelmc/support_vector.hpp"
#include "skelmc/word.hpp"

namespace skelmc {

// Dense matrices above this many states are refused (2^15 states is 128 MiB).
inline constexpr std::size_t kMaxDenseStates = std::size_t{1} << 15;

// The state set A^L, indexed lexicographically with the oldest symbol most
// significant.
struct WordSpace {
  std::size_t alphabet_size = 0;
  std::size_t length = 0;

  std::uint64_t size() const;
  Word word(std::uint64_t index) const { return unrank(index, length, alphabet_size); }
  std::uint64_t index(const Word& w) const { return rank(w, alphabet_size); }

  friend bool operator==(const WordSpace&, const WordSpace&) = default;
};

// Square boolean matrix with rows packed into 64-bit words. Addition is OR,
// multiplication AND-OR.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n);
  explicit BinaryMatrix(WordSpace space);

  static BinaryMatrix identity(std::size_t n);
  // Convenience for literals such as {{1,1},{1,0}}.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_per_row_; }
  const std::optional<WordSpace>& word_space() const { return space_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& w = bits_[i * words_per_row_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_per_row_, words_per_row_};
  }
  std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_per_row_, words_per_row_}; }

  std::size_t count_ones() const;

  template <class F>
  void for_each_successor(std::size_t i, F&& f) const {
    const auto r = row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  // Equality ignores the word-space annotation.
  friend bool operator==(const BinaryMatrix& l, const BinaryMatrix& r) { return l.n_ == r.n_ && l.bits_ == r.bits_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
  std::optional<WordSpace> space_;
};

/**
 * Subgraph of the de Bruijn graph on A^L: state u may move to
 * (u without its oldest symbol) followed by a, for each allowed symbol a.
 * Stores one |A|-bit row per state, so it scales to millions of states where
 * a dense BinaryMatrix cannot. For L = 0 the single state loops to itself
 * whenever any symbol is allowed.
 */
class ShiftGraph {
 public:
  ShiftGraph() = default;
  explicit ShiftGraph(WordSpace space);

  const WordSpace& space() const { return space_; }
  std::size_t size() const { return n_; }

  bool allowed(std::uint64_t u, Symbol a) const {
    return (bits_[u * words_per_row_ + a / 64] >> (a % 64)) & 1U;
  }
  void set_allowed(std::uint64_t u, Symbol a, bool value = true) {
    auto& w = bits_[u * words_per_row_ + a / 64];
    const std::uint64_t mask = std::uint64_t{1} << (a % 64);
    w = value ? (w | mask) : (w & ~mask);
  }
  void set_row(std::uint64_t u, const SupportVector& v);
  std::size_t out_degree(std::uint64_t u) const;

  std::uint64_t successor(std::uint64_t u, Symbol a) const {
    return space_.length == 0 ? 0 : shift_index(u, a, tail_space_, space_.alphabet_size);
  }

  template <class F>
  void for_each_successor(std::size_t u, F&& f) const {
    const std::size_t k = space_.alphabet_size;
    if (space_.length == 0) {
      for (std::size_t a = 0; a < k; ++a)
        if (allowed(u, static_cast<Symbol>(a))) {
          f(std::size_t{0});
          return;
        }
      return;
    }
    const std::uint64_t base = (u % tail_space_) * k;
    for (std::size_t a = 0; a < k; ++a)
      if (allowed(u, static_cast<Symbol>(a))) f(static_cast<std::size_t>(base + a));
  }

  // Dense form; throws std::length_error above kMaxDenseStates.
  BinaryMatrix to_matrix() const;

  friend bool operator==(const ShiftGraph&, const ShiftGraph&) = default;

 private:
  WordSpace space_;
  std::size_t n_ = 0;
  std::uint64_t tail_space_ = 1;
  std::size_t words_per_row_ = 1;
  std::vector<std::uint64_t> bits_;
};

// (PQ)(i,j) = OR_k P(i,k) AND Q(k,j). Rows are accumulated by OR-ing packed
// rows of Q, in parallel over rows of P. Throws std::invalid_argument on a
// dimension mismatch.
BinaryMatrix bool_multiply(const BinaryMatrix& p, const BinaryMatrix& q, OpCounter* ops = nullptr);

// Sum over n >= 1 of M^n, iterated as R <- R + R M from R = M until it stops
// changing; entry (i,j) is set iff j is reachable from i in at least one step.
BinaryMatrix reach_sum(const BinaryMatrix& m, OpCounter* ops = nullptr);

bool has_all_ones_column(const BinaryMatrix& m);

// Literal, unoptimized versions kept as references for the parallel kernels.
namespace serial {

BinaryMatrix bool_multiply(const BinaryMatrix& p, const BinaryMatrix& q);
// Sum of M^1 .. M^|E| by repeated multiplication.
BinaryMatrix reach_sum(const BinaryMatrix& m);

}  // namespace serial

}  // namespace skelmc
