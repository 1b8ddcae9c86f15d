#include "skelmc/oracle.hpp"

#include <string>

#include "skelmc/graph.hpp"

namespace skelmc {

namespace {

WordSpace checked_space(const SupportKernel& kernel, std::uint64_t cap) {
  const auto states = checked_power(kernel.alphabet_size(), kernel.order());
  if (!states || *states > cap)
    throw CapExceeded("lifted chain on A^" + std::to_string(kernel.order()) + " exceeds the state cap of " +
                      std::to_string(cap));
  return WordSpace{kernel.alphabet_size(), kernel.order()};
}

}  // namespace

LiftedChain lift(const SupportKernel& kernel, std::uint64_t cap, OpCounter* ops) {
  const WordSpace space = checked_space(kernel, cap);
  LiftedChain chain{kernel.order(), ShiftGraph(space)};
  const std::size_t m = kernel.order();
  const std::size_t k = kernel.alphabet_size();
  const auto n = static_cast<std::int64_t>(chain.graph.size());

#pragma omp parallel
  {
    std::vector<Symbol> history(m);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < n; ++x) {
      std::uint64_t rest = static_cast<std::uint64_t>(x);
      for (std::size_t i = m; i-- > 0;) {
        history[i] = static_cast<Symbol>(rest % k);
        rest /= k;
      }
      chain.graph.set_row(static_cast<std::uint64_t>(x), kernel.resolve(history));
    }
  }
  count(ops, static_cast<std::uint64_t>(n) * k);
  return chain;
}

namespace serial {

LiftedChain lift(const SupportKernel& kernel, std::uint64_t cap) {
  const WordSpace space = checked_space(kernel, cap);
  LiftedChain chain{kernel.order(), ShiftGraph(space)};
  for (std::uint64_t x = 0; x < chain.graph.size(); ++x) {
    const Word w = space.word(x);
    for (Symbol a = 0; a < kernel.alphabet_size(); ++a) chain.graph.set_allowed(x, a, kernel.support(w, a));
  }
  return chain;
}

}  // namespace serial

Classification classify_brute_force(const LiftedChain& chain) {
  const ClassDecomposition dec = decompose(chain.graph);
  Classification out;
  out.order = chain.order;
  out.alphabet_size = chain.graph.space().alphabet_size;
  std::uint64_t recurrent = 0;
  for (std::size_t i = 0; i < dec.closed_count(); ++i) {
    const auto members = dec.closed_class(i);
    RecurrentClass cls;
    cls.closed_class.assign(members.begin(), members.end());
    cls.period = dec.periods[i];
    cls.recurrent_size = members.size();
    cls.members = cls.closed_class;
    recurrent += members.size();
    out.classes.push_back(std::move(cls));
  }
  out.transient_count = chain.size() - recurrent;
  out.essentially_irreducible = dec.closed_count() == 1;
  out.irreducibility = dec.sccs.members.size() == 1
                           ? IrreducibilityVerdict{true, IrreducibilityReason::kLiftStronglyConnected}
                           : IrreducibilityVerdict{false, IrreducibilityReason::kLiftNotStronglyConnected};
  return out;
}

bool prop4_check(const LiftedChain& chain, OpCounter* ops) {
  return has_all_ones_column(reach_sum(chain.adjacency(), ops));
}

}  // namespace skelmc
