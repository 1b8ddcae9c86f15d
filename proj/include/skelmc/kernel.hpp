#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skelmc/alphabet.hpp"
#include "skelmc/support_vector.hpp"
#include "skelmc/word.hpp"

namespace skelmc {

class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  Word suffix;  // oldest-to-newest, 1 <= |suffix| <= order
  SupportVector support;
  std::optional<std::vector<double>> probs;
};

/**
 * Transition kernel of an order-m chain over a finite alphabet, stored as a
 * context tree of support vectors.
 *
 * The effective support of a history x in A^m is the support of the longest
 * listed context that is a suffix of x, or the default support when none is.
 * Construction validates the kernel and throws KernelError on any violation,
 * so every instance satisfies:
 *   - listed suffixes are distinct and have length in [1, m];
 *   - every effective support row has at least one allowed symbol;
 *   - where probabilities are given they sum to one and match the support.
 */
class SupportKernel {
 public:
  SupportKernel(Alphabet alphabet, std::size_t order, std::vector<Context> contexts,
                SupportVector default_support);
  // Default support: every symbol allowed.
  SupportKernel(Alphabet alphabet, std::size_t order, std::vector<Context> contexts);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  std::size_t order() const { return order_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  const SupportVector& default_support() const { return default_support_; }
  // Length of the longest listed context (0 when none are listed).
  std::size_t max_context_length() const { return max_context_length_; }

  // Support of the longest listed suffix of `history`, which may have any
  // length; histories shorter than m resolve as if every completion agreed.
  const SupportVector& resolve(std::span<const Symbol> history) const;

  // Effective support row of x; throws KernelError unless |x| == m.
  const SupportVector& effective_support(const Word& x) const;
  bool support(const Word& x, Symbol a) const { return effective_support(x).test(a); }

  // True when some listed context strictly longer than w ends with w, i.e.
  // the support below w in the context tree is not yet constant.
  bool has_longer_context(const Word& w) const;

 private:
  struct TrieNode {
    std::vector<std::int32_t> children;  // indexed by symbol, empty for a leaf
    std::int32_t context = -1;           // index into contexts_
  };

  void build_trie();
  void validate() const;
  std::int32_t find_node(const Word& w) const;

  Alphabet alphabet_;
  std::size_t order_ = 0;
  std::vector<Context> contexts_;
  SupportVector default_support_;
  std::size_t max_context_length_ = 0;
  std::vector<TrieNode> trie_;
};

struct ParseOptions {
  // Probabilities strictly below this are coerced to zero at load time.
  double zero_tol = 0.0;
};

SupportKernel parse_kernel(std::string_view text, const ParseOptions& options = {});
SupportKernel load_kernel(const std::filesystem::path& path, const ParseOptions& options = {});

// Canonical document for a kernel, stable byte-for-byte for a given kernel.
std::string serialize_kernel(const SupportKernel& kernel);

// Full-table kernel with every x in A^m listed. Each entry is prohibited
// independently with probability `prohibition_rate`; all-false rows get one
// uniformly chosen symbol re-enabled. Deterministic given the seed.
SupportKernel random_kernel(std::size_t alphabet_size, std::size_t order, double prohibition_rate,
                            std::uint64_t seed);

}  // namespace skelmc
