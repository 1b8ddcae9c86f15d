#include "skelmc/strategies.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>

#include "skelmc/graph.hpp"
#include "skelmc/oracle.hpp"
#include "skelmc/skeleton_matrix.hpp"

namespace skelmc {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kProp4OnLift: return "prop4-lift";
    case Strategy::kTarjanOnLift: return "tarjan-lift";
    case Strategy::kSkeletonTarjan: return "skeleton-tarjan";
    case Strategy::kSkeletonProp1: return "skeleton-prop1";
  }
  return "unknown";
}

namespace {

struct Outcome {
  bool essential;
  std::uint64_t states;
};

StrategyResult measure(Strategy strategy, unsigned repeats, const std::function<Outcome(OpCounter&)>& run) {
  StrategyResult result;
  result.strategy = strategy;
  double best = std::numeric_limits<double>::infinity();
  try {
    for (unsigned r = 0; r < std::max(1U, repeats); ++r) {
      OpCounter ops;
      const auto start = std::chrono::steady_clock::now();
      const Outcome outcome = run(ops);
      const auto stop = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
      result.ops = ops.ops;
      result.states = outcome.states;
      result.essentially_irreducible = outcome.essential;
    }
    result.wall_ms = best;
  } catch (const std::length_error& e) {
    result.note = std::string("skipped: ") + e.what();
  }
  return result;
}

}  // namespace

std::vector<StrategyResult> compare_strategies(const SupportKernel& kernel, unsigned repeats) {
  std::vector<StrategyResult> rows;

  rows.push_back(measure(Strategy::kProp4OnLift, repeats, [&](OpCounter& ops) {
    const LiftedChain chain = lift(kernel, kDefaultLiftCap, &ops);
    return Outcome{prop4_check(chain, &ops), chain.size()};
  }));

  rows.push_back(measure(Strategy::kTarjanOnLift, repeats, [&](OpCounter& ops) {
    const LiftedChain chain = lift(kernel, kDefaultLiftCap, &ops);
    return Outcome{decompose(chain.graph, &ops).closed_count() == 1, chain.size()};
  }));

  rows.push_back(measure(Strategy::kSkeletonTarjan, repeats, [&](OpCounter& ops) {
    const Skeleton skeleton = skeleton_pruned(kernel, {}, &ops);
    const ShiftGraph graph = skeleton_graph(skeleton);
    count(&ops, graph.size());
    return Outcome{decompose(graph, &ops).closed_count() == 1, graph.size()};
  }));

  rows.push_back(measure(Strategy::kSkeletonProp1, repeats, [&](OpCounter& ops) {
    const Skeleton skeleton = skeleton_pruned(kernel, {}, &ops);
    const ShiftGraph graph = skeleton_graph(skeleton);
    count(&ops, graph.size());
    return Outcome{has_all_ones_column(reach_sum(graph.to_matrix(), &ops)), graph.size()};
  }));

  return rows;
}

}  // namespace skelmc
