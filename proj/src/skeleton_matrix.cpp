#include "skelmc/skeleton_matrix.hpp"

#include <stdexcept>
#include <string>

namespace skelmc {

ShiftGraph skeleton_graph(const Skeleton& skeleton) {
  const WordSpace space{skeleton.alphabet_size(), skeleton.order()};
  if (space.size() > kMaxSkeletonStates)
    throw std::length_error("skeleton matrix over " + std::to_string(space.size()) + " states is too large");
  ShiftGraph graph(space);
  const auto n = static_cast<std::int64_t>(graph.size());
  bool covered = true;
#pragma omp parallel for schedule(static) reduction(&& : covered)
  for (std::int64_t u = 0; u < n; ++u) {
    const SkeletonEntry* entry = skeleton.find_suffix_of(space.word(static_cast<std::uint64_t>(u)));
    if (entry) graph.set_row(static_cast<std::uint64_t>(u), entry->support);
    covered = covered && entry != nullptr;
  }
  if (!covered) throw std::logic_error("skeleton does not cover every state of A^K");
  return graph;
}

BinaryMatrix build_skeleton_matrix(const SupportKernel& kernel, const Skeleton& skeleton) {
  if (skeleton.alphabet_size() != kernel.alphabet_size())
    throw KernelError("skeleton and kernel have different alphabets");
  if (skeleton.order() > kernel.order()) throw KernelError("skeleton order exceeds kernel order");
  return skeleton_graph(skeleton).to_matrix();
}

}  // namespace skelmc
