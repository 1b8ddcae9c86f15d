#pragma once

// Hand-built kernels shared by the test suites.

#include "skelmc/kernel.hpp"

namespace skelmc::testing {

inline Alphabet binary() { return Alphabet({"0", "1"}); }

// Order 10, symbol 1 prohibited after "10" and after "111".
inline SupportKernel example4_kernel() {
  const Alphabet a = binary();
  return SupportKernel(a, 10,
                       {Context{a.parse("10"), SupportVector{1, 0}, std::vector<double>{1.0, 0.0}},
                        Context{a.parse("111"), SupportVector{1, 0}, std::vector<double>{1.0, 0.0}}});
}

inline SupportKernel full_support_kernel(std::size_t order, std::size_t alphabet_size = 2) {
  return SupportKernel(Alphabet::numeric(alphabet_size), order, {});
}

// No two consecutive 1s.
inline SupportKernel golden_mean_kernel(std::size_t order = 2) {
  const Alphabet a = binary();
  return SupportKernel(a, order, {Context{a.parse("1"), SupportVector{1, 0}, std::nullopt}});
}

inline SupportKernel alternating_kernel() {
  const Alphabet a = binary();
  return SupportKernel(a, 1,
                       {Context{a.parse("0"), SupportVector{0, 1}, std::nullopt},
                        Context{a.parse("1"), SupportVector{1, 0}, std::nullopt}});
}

inline SupportKernel two_absorbing_kernel() {
  const Alphabet a = binary();
  return SupportKernel(a, 1,
                       {Context{a.parse("0"), SupportVector{1, 0}, std::nullopt},
                        Context{a.parse("1"), SupportVector{0, 1}, std::nullopt}});
}

inline Word w(const char* text) { return binary().parse(text); }

}  // namespace skelmc::testing
