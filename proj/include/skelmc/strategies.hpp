#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skelmc/kernel.hpp"

namespace skelmc {

// Ways of deciding essential irreducibility, from most to least expensive.
enum class Strategy {
  kProp4OnLift,      // reachability power sum on the dense lifted matrix
  kTarjanOnLift,     // closed SCC count on the lifted chain
  kSkeletonTarjan,   // skeleton, then closed SCC count on the skeleton matrix
  kSkeletonProp1,    // skeleton, then all-ones column of the skeleton power sum
};

std::string to_string(Strategy s);

struct StrategyResult {
  Strategy strategy = Strategy::kProp4OnLift;
  std::uint64_t states = 0;  // size of the state space the final check touched
  std::uint64_t ops = 0;
  double wall_ms = 0.0;      // best of the repetitions
  std::optional<bool> essentially_irreducible;  // nullopt when skipped
  std::string note;
};

// Runs every strategy `repeats` times. Strategies whose state space exceeds
// the dense or lift caps are reported as skipped.
std::vector<StrategyResult> compare_strategies(const SupportKernel& kernel, unsigned repeats = 3);

}  // namespace skelmc
