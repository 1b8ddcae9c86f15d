#include "skelmc/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "skelmc/skeleton_matrix.hpp"

namespace skelmc {

namespace {

std::optional<std::uint64_t> checked_add(std::optional<std::uint64_t> a, std::optional<std::uint64_t> b) {
  if (!a || !b || *a > UINT64_MAX - *b) return std::nullopt;
  return *a + *b;
}

// Number of skeleton-matrix paths with `steps` edges starting in `start`.
// Closed classes keep every path inside the class.
std::optional<std::uint64_t> count_paths(const ShiftGraph& graph, std::span<const std::size_t> start,
                                         std::size_t steps) {
  const std::size_t k = graph.space().alphabet_size;
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < start.size(); ++i) local.emplace(start[i], i);
  std::vector<std::optional<std::uint64_t>> current(start.size(), std::uint64_t{1});
  std::vector<std::optional<std::uint64_t>> next(start.size());
  for (std::size_t t = 0; t < steps; ++t) {
    std::fill(next.begin(), next.end(), std::uint64_t{0});
    for (std::size_t i = 0; i < start.size(); ++i) {
      for (std::size_t s = 0; s < k; ++s) {
        if (!graph.allowed(start[i], static_cast<Symbol>(s))) continue;
        auto it = local.find(graph.successor(start[i], static_cast<Symbol>(s)));
        if (it != local.end()) next[it->second] = checked_add(next[it->second], current[i]);
      }
    }
    std::swap(current, next);
  }
  std::optional<std::uint64_t> total = 0;
  for (const auto& c : current) total = checked_add(total, c);
  return total;
}

// All words ab with a in `start` and b following matrix edges, as A^m ranks.
std::vector<std::uint64_t> enumerate_paths(const ShiftGraph& graph, std::span<const std::size_t> start,
                                           std::size_t steps) {
  const std::size_t k = graph.space().alphabet_size;
  std::vector<std::uint64_t> out;
  struct Frame {
    std::uint64_t state;
    std::uint64_t word;
    std::size_t depth;
  };
  std::vector<Frame> stack;
  for (std::size_t a : start) stack.push_back({a, a, 0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.depth == steps) {
      out.push_back(f.word);
      continue;
    }
    for (std::size_t s = 0; s < k; ++s)
      if (graph.allowed(f.state, static_cast<Symbol>(s)))
        stack.push_back({graph.successor(f.state, static_cast<Symbol>(s)), f.word * k + s, f.depth + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AdmissibleSet::AdmissibleSet(ShiftGraph skeleton_matrix, std::size_t order)
    : graph_(std::move(skeleton_matrix)), order_(order) {
  if (graph_.space().length > order_) throw std::invalid_argument("skeleton order exceeds chain order");
}

bool AdmissibleSet::contains(const Word& w) const {
  const std::size_t big_k = skeleton_order();
  std::uint64_t u = big_k == 0 ? 0 : graph_.space().index(w.prefix(big_k));
  for (std::size_t t = big_k; t < order_; ++t) {
    if (!graph_.allowed(u, w[t])) return false;
    u = graph_.successor(u, w[t]);
  }
  return true;
}

bool is_admissible(const AdmissibleSet& admissible, const Word& w) {
  if (w.size() != admissible.order())
    throw KernelError("is_admissible: word length " + std::to_string(w.size()) + " does not match order " +
                      std::to_string(admissible.order()));
  return admissible.contains(w);
}

std::string_view to_string(IrreducibilityReason reason) {
  switch (reason) {
    case IrreducibilityReason::kFullSupport: return "K = 0: full support";
    case IrreducibilityReason::kIntermediateOrder: return "Prop 2 contraposition";
    case IrreducibilityReason::kShortProhibitingWord: return "Prop 3";
    case IrreducibilityReason::kSingleComponent: return "K = m: skeleton matrix is strongly connected";
    case IrreducibilityReason::kSeveralComponents: return "K = m: skeleton matrix is not strongly connected";
    case IrreducibilityReason::kLiftStronglyConnected: return "lifted chain is strongly connected";
    case IrreducibilityReason::kLiftNotStronglyConnected: return "lifted chain is not strongly connected";
  }
  return "unknown";
}

bool Classification::in_recurrent_class(std::size_t i, const Word& w) const {
  const RecurrentClass& cls = classes.at(i);
  if (w.size() != order) return false;
  if (!admissible) {
    const std::uint64_t idx = rank(w, alphabet_size);
    return std::binary_search(cls.closed_class.begin(), cls.closed_class.end(), idx);
  }
  const std::size_t big_k = admissible->skeleton_order();
  const std::uint64_t head = big_k == 0 ? 0 : rank(w.prefix(big_k), alphabet_size);
  return std::binary_search(cls.closed_class.begin(), cls.closed_class.end(), head) && admissible->contains(w);
}

IrreducibilityVerdict decide_irreducibility(const Skeleton& skeleton, std::size_t order,
                                            const ClassDecomposition& skeleton_classes) {
  const std::size_t big_k = skeleton.order();
  if (big_k == 0)
    return skeleton.entries().front().support.all() ? IrreducibilityVerdict{true, IrreducibilityReason::kFullSupport}
                                                    : IrreducibilityVerdict{false, IrreducibilityReason::kShortProhibitingWord};
  if (big_k < order) return {false, IrreducibilityReason::kIntermediateOrder};
  for (const auto& e : skeleton.entries())
    if (e.word.size() < order && !e.support.all()) return {false, IrreducibilityReason::kShortProhibitingWord};
  // With K = m the skeleton matrix is the support graph of the lifted chain.
  if (skeleton_classes.sccs.members.size() == 1) return {true, IrreducibilityReason::kSingleComponent};
  return {false, IrreducibilityReason::kSeveralComponents};
}

Classification classify(const SupportKernel& kernel, const ClassifyOptions& options) {
  Classification out;
  out.order = kernel.order();
  out.alphabet_size = kernel.alphabet_size();
  out.skeleton = skeleton_pruned(kernel);
  const std::size_t big_k = out.skeleton->order();

  ShiftGraph graph = skeleton_graph(*out.skeleton);
  const ClassDecomposition dec = decompose(graph);
  const std::size_t steps = out.order - big_k;
  const auto total = checked_power(out.alphabet_size, out.order);
  const bool materialize = total && *total <= options.enumerate_cap;

  std::optional<std::uint64_t> recurrent_total = 0;
  out.classes.resize(dec.closed_count());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < dec.closed_count(); ++i) {
    const auto members = dec.closed_class(i);
    RecurrentClass& cls = out.classes[i];
    cls.closed_class.assign(members.begin(), members.end());
    cls.period = dec.periods[i];
    cls.recurrent_size = count_paths(graph, members, steps);
    if (materialize) cls.members = enumerate_paths(graph, members, steps);
  }
  for (const auto& cls : out.classes) recurrent_total = checked_add(recurrent_total, cls.recurrent_size);
  if (total && recurrent_total) out.transient_count = *total - *recurrent_total;

  out.essentially_irreducible = dec.closed_count() == 1;
  out.irreducibility = decide_irreducibility(*out.skeleton, out.order, dec);
  out.admissible = std::make_shared<const AdmissibleSet>(std::move(graph), out.order);
  return out;
}

bool is_essentially_irreducible(const SupportKernel& kernel, EssentialMethod method, OpCounter* ops) {
  const Skeleton skeleton = skeleton_pruned(kernel, {}, ops);
  const ShiftGraph graph = skeleton_graph(skeleton);
  count(ops, graph.size());
  if (method == EssentialMethod::kScc) return decompose(graph, ops).closed_count() == 1;
  return has_all_ones_column(reach_sum(graph.to_matrix(), ops));
}

IrreducibilityVerdict is_irreducible(const SupportKernel& kernel) {
  const Skeleton skeleton = skeleton_pruned(kernel);
  if (skeleton.order() == 0 || skeleton.order() < kernel.order())
    return decide_irreducibility(skeleton, kernel.order(), ClassDecomposition{});
  return decide_irreducibility(skeleton, kernel.order(), decompose(skeleton_graph(skeleton)));
}

}  // namespace skelmc
