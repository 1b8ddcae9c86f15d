#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skelmc/kernel.hpp"
#include "skelmc/op_counter.hpp"

namespace skelmc {

struct SkeletonEntry {
  Word word;
  SupportVector support;

  friend bool operator==(const SkeletonEntry&, const SkeletonEntry&) = default;
};

/**
 * Minimal determining suffixes of a kernel. Every x in A^m ends with exactly
 * one entry's word, that word alone fixes the support row of x, and dropping
 * its oldest symbol would not. The order is the longest word length; the
 * full-support kernel has the single empty word and order 0.
 *
 * Entries are kept in context-tree order (most recent symbol first).
 */
class Skeleton {
 public:
  Skeleton() = default;
  Skeleton(std::vector<SkeletonEntry> entries, std::size_t alphabet_size);

  const std::vector<SkeletonEntry>& entries() const { return entries_; }
  std::size_t order() const { return order_; }
  std::size_t alphabet_size() const { return alphabet_size_; }

  // The entry whose word is a suffix of `history`; nullptr if none is.
  const SkeletonEntry* find_suffix_of(const Word& history) const;

  friend bool operator==(const Skeleton& l, const Skeleton& r) {
    return l.order_ == r.order_ && l.entries_ == r.entries_;
  }

 private:
  std::vector<SkeletonEntry> entries_;
  std::size_t order_ = 0;
  std::size_t alphabet_size_ = 0;
  std::map<Word, std::size_t> by_word_;
};

// Minimal suffix length l such that the support of symbol a after y.suffix(x, l)
// is the same for every y in A^(m-l). Enumerates completions directly.
std::size_t determining_length(const SupportKernel& kernel, const Word& x, Symbol a);

// Reference skeleton straight from the definition: tabulate every row of the
// kernel, mark each suffix whose support is constant over all completions,
// and keep the shortest such suffix of every x. Refuses |A|^m > cap.
Skeleton skeleton_direct(const SupportKernel& kernel, std::uint64_t cap = std::uint64_t{1} << 22);

struct PruneOptions {
  bool early_stop = true;
};

struct PrunePass {
  std::size_t level = 0;
  std::vector<Word> cut_parents;  // parents whose sibling set was removed
  // Sibling sets removed inside subtrees the builder collapsed up front.
  bool implicit_cuts = false;
};

/**
 * Context tree of depth m whose leaves carry transition vectors. Built lazily:
 * a subtree below which no longer context is listed has constant support and
 * is created as a single collapsed leaf, standing in for the full subtree.
 * Pruning then walks levels m..1 and removes every complete sibling set of
 * leaves with equal vectors, stopping after the first level that removes
 * nothing (counting the implicit removals inside collapsed subtrees).
 */
class KernelTree {
 public:
  struct Node {
    Word word;
    std::size_t depth = 0;
    std::int64_t parent = -1;
    std::int64_t first_child = -1;  // |A| contiguous children, or -1 for a leaf
    std::optional<SupportVector> vector;
    bool collapsed = false;
    bool alive = true;
  };

  static KernelTree build(const SupportKernel& kernel, OpCounter* ops = nullptr);

  std::vector<PrunePass> prune(const PruneOptions& options = {}, OpCounter* ops = nullptr);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t order() const { return order_; }
  std::vector<std::size_t> leaves() const;
  Skeleton to_skeleton() const;

  // Indented listing, one node per line, leaves with their vectors.
  std::string to_text(const Alphabet& alphabet) const;
  std::string to_dot(const Alphabet& alphabet) const;

 private:
  std::vector<Node> nodes_;
  std::size_t alphabet_size_ = 0;
  std::size_t order_ = 0;
};

Skeleton skeleton_pruned(const SupportKernel& kernel, const PruneOptions& options = {}, OpCounter* ops = nullptr);

}  // namespace skelmc
