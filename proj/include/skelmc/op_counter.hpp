#pragma once

#include <cstdint>

namespace skelmc {

// Algorithmic operation tally used by the benchmarks. Units: one 64-bit word
// AND/OR in matrix kernels, one node or edge visit in graph and tree code,
// one support lookup when tabulating a kernel.
struct OpCounter {
  std::uint64_t ops = 0;
  void add(std::uint64_t n) { ops += n; }
};

inline void count(OpCounter* counter, std::uint64_t n) {
  if (counter) counter->add(n);
}

}  // namespace skelmc
