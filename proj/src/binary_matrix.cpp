#include "skelmc/binary_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skelmc {

namespace {

std::size_t checked_dense_size(std::uint64_t n) {
  if (n > kMaxDenseStates)
    throw std::length_error("dense boolean matrix of " + std::to_string(n) + " states exceeds the limit of " +
                            std::to_string(kMaxDenseStates));
  return static_cast<std::size_t>(n);
}

}  // namespace

std::uint64_t WordSpace::size() const {
  auto n = checked_power(alphabet_size, length);
  if (!n) throw std::overflow_error("word space size overflows 64 bits");
  return *n;
}

BinaryMatrix::BinaryMatrix(std::size_t n)
    : n_(checked_dense_size(n)), words_per_row_((n + 63) / 64), bits_(n_ * words_per_row_, 0) {}

BinaryMatrix::BinaryMatrix(WordSpace space) : BinaryMatrix(checked_dense_size(space.size())) {
  space_ = space;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BinaryMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("from_rows: matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

std::size_t BinaryMatrix::count_ones() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

ShiftGraph::ShiftGraph(WordSpace space)
    : space_(space),
      n_(static_cast<std::size_t>(space.size())),
      tail_space_(space.length == 0 ? 1 : space.size() / space.alphabet_size),
      words_per_row_((space.alphabet_size + 63) / 64),
      bits_(n_ * words_per_row_, 0) {}

void ShiftGraph::set_row(std::uint64_t u, const SupportVector& v) {
  for (std::size_t a = 0; a < v.size(); ++a) set_allowed(u, static_cast<Symbol>(a), v.test(static_cast<Symbol>(a)));
}

std::size_t ShiftGraph::out_degree(std::uint64_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[u * words_per_row_ + w]));
  return d;
}

BinaryMatrix ShiftGraph::to_matrix() const {
  BinaryMatrix m(space_);
  for (std::size_t u = 0; u < n_; ++u) for_each_successor(u, [&](std::size_t v) { m.set(u, v); });
  return m;
}

BinaryMatrix bool_multiply(const BinaryMatrix& p, const BinaryMatrix& q, OpCounter* ops) {
  if (p.size() != q.size()) throw std::invalid_argument("bool_multiply: dimension mismatch");
  const std::size_t n = p.size();
  const std::size_t words = p.words_per_row();
  BinaryMatrix out(n);
  std::uint64_t total = 0;

#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::size_t i = 0; i < n; ++i) {
    auto acc = out.row(i);
    p.for_each_successor(i, [&](std::size_t k) {
      const auto src = q.row(k);
      for (std::size_t w = 0; w < words; ++w) acc[w] |= src[w];
      total += words;
    });
  }
  count(ops, total);
  return out;
}

BinaryMatrix reach_sum(const BinaryMatrix& m, OpCounter* ops) {
  const std::size_t n = m.size();
  const std::size_t words = m.words_per_row();
  BinaryMatrix current = m;
  BinaryMatrix next(n);
  std::uint64_t total = 0;

  for (;;) {
    bool changed = false;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total) reduction(|| : changed)
    for (std::size_t i = 0; i < n; ++i) {
      auto acc = next.row(i);
      const auto mine = current.row(i);
      std::copy(mine.begin(), mine.end(), acc.begin());
      current.for_each_successor(i, [&](std::size_t k) {
        const auto src = m.row(k);
        for (std::size_t w = 0; w < words; ++w) acc[w] |= src[w];
        total += words;
      });
      changed = changed || !std::equal(acc.begin(), acc.end(), mine.begin());
    }
    std::swap(current, next);
    if (!changed) break;
  }
  count(ops, total);
  return current;
}

bool has_all_ones_column(const BinaryMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  std::vector<std::uint64_t> acc(m.words_per_row(), ~std::uint64_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = m.row(i);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= r[w];
  }
  // Padding bits past column n-1 are always zero in every row.
  return std::any_of(acc.begin(), acc.end(), [](std::uint64_t w) { return w != 0; });
}

namespace serial {

BinaryMatrix bool_multiply(const BinaryMatrix& p, const BinaryMatrix& q) {
  if (p.size() != q.size()) throw std::invalid_argument("bool_multiply: dimension mismatch");
  const std::size_t n = p.size();
  BinaryMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool v = false;
      for (std::size_t k = 0; k < n && !v; ++k) v = p.get(i, k) && q.get(k, j);
      out.set(i, j, v);
    }
  return out;
}

BinaryMatrix reach_sum(const BinaryMatrix& m) {
  const std::size_t n = m.size();
  BinaryMatrix sum = m;
  BinaryMatrix power = m;
  for (std::size_t k = 2; k <= n; ++k) {
    power = serial::bool_multiply(power, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power.get(i, j)) sum.set(i, j);
  }
  return sum;
}

}  // namespace serial

}  // namespace skelmc
