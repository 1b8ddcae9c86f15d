#pragma once

#include <cstdint>
#include <stdexcept>

#include "skelmc/binary_matrix.hpp"
#include "skelmc/classify.hpp"
#include "skelmc/kernel.hpp"
#include "skelmc/op_counter.hpp"

namespace skelmc {

// Brute-force ground truth: the order-m chain rewritten as a first-order
// chain on A^m. Nothing here goes through the skeleton.

inline constexpr std::uint64_t kDefaultLiftCap = std::uint64_t{1} << 22;

// x -> (x_2..x_m, a) iff p(x, a) > 0. Every state has between 1 and |A|
// successors, all sharing their first m-1 symbols.
struct LiftedChain {
  std::size_t order = 0;
  ShiftGraph graph;

  std::size_t size() const { return graph.size(); }
  // Dense adjacency; throws std::length_error above kMaxDenseStates.
  BinaryMatrix adjacency() const { return graph.to_matrix(); }
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Throws CapExceeded when |A|^m > cap.
LiftedChain lift(const SupportKernel& kernel, std::uint64_t cap = kDefaultLiftCap, OpCounter* ops = nullptr);

// Recurrent classes are the closed SCCs of the lifted chain; periods by BFS
// level gcd. Classes list their members explicitly in both fields.
Classification classify_brute_force(const LiftedChain& chain);

// Essential irreducibility from the positivity pattern of sum_n P^n: true iff
// some column of the reachability sum is all ones.
bool prop4_check(const LiftedChain& chain, OpCounter* ops = nullptr);

namespace serial {

LiftedChain lift(const SupportKernel& kernel, std::uint64_t cap = kDefaultLiftCap);

}  // namespace serial

}  // namespace skelmc
