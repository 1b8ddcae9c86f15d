#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "skelmc/binary_matrix.hpp"
#include "skelmc/graph.hpp"
#include "skelmc/kernel.hpp"
#include "skelmc/skeleton.hpp"

namespace skelmc {

// Words of A^m all of whose consecutive K-windows are linked by skeleton
// matrix edges.
class AdmissibleSet {
 public:
  AdmissibleSet(ShiftGraph skeleton_matrix, std::size_t order);

  const ShiftGraph& skeleton_matrix() const { return graph_; }
  std::size_t order() const { return order_; }
  std::size_t skeleton_order() const { return graph_.space().length; }

  bool contains(const Word& w) const;

 private:
  ShiftGraph graph_;
  std::size_t order_;
};

// Throws KernelError unless |w| == m.
bool is_admissible(const AdmissibleSet& admissible, const Word& w);

enum class IrreducibilityReason {
  kFullSupport,            // K = 0, every symbol allowed
  kIntermediateOrder,      // 0 < K < m
  kShortProhibitingWord,   // a skeleton word shorter than m prohibits a symbol (K = 0 or K = m)
  kSingleComponent,        // K = m, skeleton matrix strongly connected
  kSeveralComponents,      // K = m, skeleton matrix not strongly connected
  kLiftStronglyConnected,  // brute-force route
  kLiftNotStronglyConnected,
};

// Stable report strings; these are part of the output contract.
std::string_view to_string(IrreducibilityReason reason);

struct IrreducibilityVerdict {
  bool irreducible = false;
  IrreducibilityReason reason = IrreducibilityReason::kFullSupport;
};

struct RecurrentClass {
  // Closed class of the skeleton matrix as indices into A^K; on the
  // brute-force route this is the recurrent class itself, in A^m.
  std::vector<std::uint64_t> closed_class;
  std::uint64_t period = 0;
  // nullopt when the count does not fit in 64 bits.
  std::optional<std::uint64_t> recurrent_size;
  // Indices into A^m, ascending; present when |A|^m is within the cap.
  std::optional<std::vector<std::uint64_t>> members;
};

struct Classification {
  std::size_t order = 0;
  std::size_t alphabet_size = 0;
  std::optional<Skeleton> skeleton;  // empty on the brute-force route
  std::vector<RecurrentClass> classes;
  std::optional<std::uint64_t> transient_count;
  bool essentially_irreducible = false;
  IrreducibilityVerdict irreducibility;
  std::shared_ptr<const AdmissibleSet> admissible;  // skeleton route only

  std::size_t class_count() const { return classes.size(); }
  std::optional<std::size_t> skeleton_order() const {
    return skeleton ? std::optional<std::size_t>(skeleton->order()) : std::nullopt;
  }
  // Membership of w in the i-th recurrent class without materializing it.
  bool in_recurrent_class(std::size_t i, const Word& w) const;
};

struct ClassifyOptions {
  // Recurrent classes are listed explicitly when |A|^m is at most this.
  std::uint64_t enumerate_cap = std::uint64_t{1} << 20;
};

/**
 * Classification from the skeleton: the closed classes C_i of the skeleton
 * matrix give the recurrent classes R_i = { ab : a in C_i, ab admissible } of
 * the chain, with equal periods. Recurrent class sizes are counted as matrix
 * paths of length m - K starting in C_i.
 *
 * Only the number of transient states is reported. The skeleton matrix says
 * nothing about how they are organized; use the oracle for that.
 */
Classification classify(const SupportKernel& kernel, const ClassifyOptions& options = {});

enum class EssentialMethod { kScc, kMatrixSum };

bool is_essentially_irreducible(const SupportKernel& kernel, EssentialMethod method = EssentialMethod::kScc,
                                OpCounter* ops = nullptr);

IrreducibilityVerdict is_irreducible(const SupportKernel& kernel);

// Decision procedure shared by classify() and is_irreducible().
IrreducibilityVerdict decide_irreducibility(const Skeleton& skeleton, std::size_t order,
                                            const ClassDecomposition& skeleton_classes);

}  // namespace skelmc
