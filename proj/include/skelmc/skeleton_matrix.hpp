#pragma once

#include <cstdint>

#include "skelmc/binary_matrix.hpp"
#include "skelmc/kernel.hpp"
#include "skelmc/skeleton.hpp"

namespace skelmc {

// States beyond this are refused when building the skeleton graph.
inline constexpr std::uint64_t kMaxSkeletonStates = std::uint64_t{1} << 24;

// The skeleton matrix in compact form: over A^K, u -> shift(u).a iff the
// skeleton word ending u allows a.
ShiftGraph skeleton_graph(const Skeleton& skeleton);

// Dense skeleton matrix over A^K. For K = 0 this is the 1x1 matrix [1].
// Throws KernelError if the skeleton does not belong to this kernel's alphabet.
BinaryMatrix build_skeleton_matrix(const SupportKernel& kernel, const Skeleton& skeleton);

}  // namespace skelmc
