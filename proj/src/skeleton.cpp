#include "skelmc/skeleton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skelmc {

Skeleton::Skeleton(std::vector<SkeletonEntry> entries, std::size_t alphabet_size)
    : entries_(std::move(entries)), alphabet_size_(alphabet_size) {
  std::sort(entries_.begin(), entries_.end(),
            [](const SkeletonEntry& l, const SkeletonEntry& r) { return context_tree_less(l.word, r.word); });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    order_ = std::max(order_, entries_[i].word.size());
    by_word_.emplace(entries_[i].word, i);
  }
}

const SkeletonEntry* Skeleton::find_suffix_of(const Word& history) const {
  const std::size_t longest = std::min(order_, history.size());
  for (std::size_t len = 0; len <= longest; ++len) {
    auto it = by_word_.find(history.suffix(len));
    if (it != by_word_.end()) return &entries_[it->second];
  }
  return nullptr;
}

std::size_t determining_length(const SupportKernel& kernel, const Word& x, Symbol a) {
  const std::size_t m = kernel.order();
  if (x.size() != m) throw KernelError("determining_length: context length does not match the order");
  const std::size_t k = kernel.alphabet_size();
  for (std::size_t len = 0; len < m; ++len) {
    const Word tail = x.suffix(len);
    const auto completions = checked_power(k, m - len);
    if (!completions) continue;
    const bool first = kernel.support(unrank(0, m - len, k) + tail, a);
    bool constant = true;
    for (std::uint64_t y = 1; y < *completions && constant; ++y)
      constant = kernel.support(unrank(y, m - len, k) + tail, a) == first;
    if (constant) return len;
  }
  return m;
}

Skeleton skeleton_direct(const SupportKernel& kernel, std::uint64_t cap) {
  const std::size_t m = kernel.order();
  const std::size_t k = kernel.alphabet_size();
  const auto total = checked_power(k, m);
  if (!total || *total > cap) throw std::length_error("skeleton_direct: |A|^m exceeds the enumeration cap");
  const auto rows = static_cast<std::int64_t>(*total);

  std::vector<const SupportVector*> row_of(static_cast<std::size_t>(rows));
#pragma omp parallel
  {
    std::vector<Symbol> history(m);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < rows; ++x) {
      std::uint64_t rest = static_cast<std::uint64_t>(x);
      for (std::size_t i = m; i-- > 0;) {
        history[i] = static_cast<Symbol>(rest % k);
        rest /= k;
      }
      row_of[static_cast<std::size_t>(x)] = &kernel.resolve(history);
    }
  }

  // determining[len][s]: every x whose last len symbols have rank s shares
  // one support row.
  std::vector<std::vector<char>> determining(m + 1);
  std::uint64_t suffixes = 1;
  for (std::size_t len = 0; len <= m; ++len, suffixes *= k) {
    auto& table = determining[len];
    table.assign(static_cast<std::size_t>(suffixes), 0);
    const auto count = static_cast<std::int64_t>(suffixes);
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < count; ++s) {
      const SupportVector& first = *row_of[static_cast<std::size_t>(s)];
      bool constant = true;
      for (std::uint64_t x = static_cast<std::uint64_t>(s) + suffixes; x < *total && constant; x += suffixes)
        constant = *row_of[x] == first;
      table[static_cast<std::size_t>(s)] = constant ? 1 : 0;
    }
  }

  std::set<std::pair<std::size_t, std::uint64_t>> chosen;
  for (std::uint64_t x = 0; x < *total; ++x) {
    std::uint64_t modulus = 1;
    for (std::size_t len = 0; len <= m; ++len, modulus *= k) {
      const std::uint64_t s = x % modulus;
      if (determining[len][s]) {
        chosen.emplace(len, s);
        break;
      }
    }
  }

  std::vector<SkeletonEntry> entries;
  for (const auto& [len, s] : chosen) entries.push_back({unrank(s, len, k), *row_of[s]});
  return Skeleton(std::move(entries), k);
}

// ---------------------------------------------------------------------------

KernelTree KernelTree::build(const SupportKernel& kernel, OpCounter* ops) {
  KernelTree tree;
  tree.alphabet_size_ = kernel.alphabet_size();
  tree.order_ = kernel.order();
  const std::size_t k = tree.alphabet_size_;

  tree.nodes_.push_back(Node{});
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
    const Word word = tree.nodes_[i].word;
    const std::size_t depth = tree.nodes_[i].depth;
    if (depth == tree.order_ || !kernel.has_longer_context(word)) {
      tree.nodes_[i].vector = kernel.resolve(word.symbols());
      tree.nodes_[i].collapsed = depth < tree.order_;
      continue;
    }
    tree.nodes_[i].first_child = static_cast<std::int64_t>(tree.nodes_.size());
    for (std::size_t c = 0; c < k; ++c) {
      Node child;
      child.word = word.prepended(static_cast<Symbol>(c));
      child.depth = depth + 1;
      child.parent = static_cast<std::int64_t>(i);
      tree.nodes_.push_back(std::move(child));
    }
  }
  count(ops, tree.nodes_.size());
  return tree;
}

std::vector<PrunePass> KernelTree::prune(const PruneOptions& options, OpCounter* ops) {
  const std::size_t k = alphabet_size_;
  std::size_t deepest = 0;
  std::size_t shallowest_collapsed = order_ + 1;
  for (const auto& n : nodes_) {
    if (!n.alive) continue;
    deepest = std::max(deepest, n.depth);
    if (n.collapsed && n.first_child < 0) shallowest_collapsed = std::min(shallowest_collapsed, n.depth);
  }

  // Levels order_..deepest+1 exist only inside collapsed subtrees, where every
  // sibling set is cut, so no early stop can fire there.
  std::vector<std::vector<std::size_t>> parents_at(deepest + 1);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive && nodes_[i].first_child >= 0) parents_at[nodes_[i].depth].push_back(i);

  std::vector<PrunePass> passes;
  std::uint64_t visits = 0;
  for (std::size_t level = deepest; level >= 1; --level) {
    const auto& parents = parents_at[level - 1];
    std::vector<char> cut(parents.size(), 0);
    const auto count_parents = static_cast<std::int64_t>(parents.size());

#pragma omp parallel for schedule(static) reduction(+ : visits)
    for (std::int64_t p = 0; p < count_parents; ++p) {
      const Node& parent = nodes_[parents[static_cast<std::size_t>(p)]];
      const auto first = static_cast<std::size_t>(parent.first_child);
      bool equal = true;
      for (std::size_t c = 0; c < k && equal; ++c) {
        const Node& child = nodes_[first + c];
        ++visits;
        equal = child.first_child < 0 && *child.vector == *nodes_[first].vector;
      }
      cut[static_cast<std::size_t>(p)] = equal ? 1 : 0;
    }

    PrunePass pass;
    pass.level = level;
    pass.implicit_cuts = shallowest_collapsed < level;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      if (!cut[p]) continue;
      Node& parent = nodes_[parents[p]];
      const auto first = static_cast<std::size_t>(parent.first_child);
      parent.vector = nodes_[first].vector;
      for (std::size_t c = 0; c < k; ++c) nodes_[first + c].alive = false;
      parent.first_child = -1;
      pass.cut_parents.push_back(parent.word);
    }
    const bool removed = !pass.cut_parents.empty() || pass.implicit_cuts;
    passes.push_back(std::move(pass));
    if (options.early_stop && !removed) break;
  }
  count(ops, visits);
  return passes;
}

std::vector<std::size_t> KernelTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive && nodes_[i].first_child < 0) out.push_back(i);
  return out;
}

Skeleton KernelTree::to_skeleton() const {
  std::vector<SkeletonEntry> entries;
  for (std::size_t i : leaves()) entries.push_back({nodes_[i].word, *nodes_[i].vector});
  return Skeleton(std::move(entries), alphabet_size_);
}

std::string KernelTree::to_text(const Alphabet& alphabet) const {
  std::ostringstream out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const Node& n = nodes_[i];
    out << std::string(2 * n.depth, ' ') << (n.word.empty() ? std::string("(root)") : alphabet.format(n.word));
    if (n.first_child < 0) out << "  [" << n.vector->to_string() << "]";
    out << '\n';
    if (n.first_child >= 0)
      for (std::size_t c = alphabet_size_; c-- > 0;) stack.push_back(static_cast<std::size_t>(n.first_child) + c);
  }
  return out.str();
}

std::string KernelTree::to_dot(const Alphabet& alphabet) const {
  std::ostringstream out;
  out << "digraph context_tree {\n  rankdir=LR;\n  node [fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (!n.alive) continue;
    const std::string name = n.word.empty() ? std::string("root") : alphabet.format(n.word);
    out << "  n" << i << " [label=\"" << name;
    if (n.first_child < 0) {
      out << "\\n[" << n.vector->to_string() << "]\"";
      if (!n.vector->all()) out << ", shape=circle, color=red";
      else out << ", shape=box";
    } else {
      out << "\", shape=plaintext";
    }
    out << "];\n";
    if (n.parent >= 0) out << "  n" << n.parent << " -> n" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

Skeleton skeleton_pruned(const SupportKernel& kernel, const PruneOptions& options, OpCounter* ops) {
  KernelTree tree = KernelTree::build(kernel, ops);
  tree.prune(options, ops);
  return tree.to_skeleton();
}

}  // namespace skelmc
