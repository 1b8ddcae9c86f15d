#include <doctest.h>

#include <algorithm>
#include <random>

#include "skelmc/classify.hpp"
#include "skelmc/oracle.hpp"
#include "skelmc/skeleton_matrix.hpp"
#include "support/brute_force.hpp"
#include "support/kernels.hpp"

using namespace skelmc;
using namespace skelmc::testing;

namespace {

std::uint64_t at(const char* word) { return rank(w(word), 2); }

// Recurrent classes of the literal lift as sorted member lists.
std::vector<BruteClass> oracle_classes(const SupportKernel& k) {
  auto classes = brute_recurrent_classes(brute_lift(k));
  std::sort(classes.begin(), classes.end(),
            [](const BruteClass& a, const BruteClass& b) { return a.members < b.members; });
  return classes;
}

std::vector<BruteClass> computed_classes(const Classification& c) {
  std::vector<BruteClass> out;
  for (const auto& cls : c.classes) {
    REQUIRE(cls.members.has_value());
    out.push_back(BruteClass{std::vector<std::size_t>(cls.members->begin(), cls.members->end()), cls.period});
  }
  std::sort(out.begin(), out.end(), [](const BruteClass& a, const BruteClass& b) { return a.members < b.members; });
  return out;
}

}  // namespace

TEST_CASE("admissible words of the order-10 example") {
  const Classification c = classify(example4_kernel());
  REQUIRE(c.admissible);
  CHECK_FALSE(is_admissible(*c.admissible, w("0000000101")));
  CHECK(is_admissible(*c.admissible, w("0000000000")));
  CHECK_FALSE(is_admissible(*c.admissible, w("0000001111")));
  CHECK(is_admissible(*c.admissible, w("0110011001")));
  CHECK_THROWS_AS(is_admissible(*c.admissible, w("000")), KernelError);
}

TEST_CASE("K = m: every word is admissible") {
  const Classification c = classify(alternating_kernel());
  CHECK(is_admissible(*c.admissible, w("0")));
  CHECK(is_admissible(*c.admissible, w("1")));
}

TEST_CASE("classify: order-10 example") {
  const Classification c = classify(example4_kernel());
  CHECK(c.skeleton_order() == 3);
  REQUIRE(c.class_count() == 1);
  const auto& cls = c.classes[0];
  CHECK(cls.closed_class ==
        std::vector<std::uint64_t>{at("000"), at("001"), at("010"), at("011"), at("100"), at("110"), at("111")});
  CHECK(cls.period == 1);
  const auto oracle = oracle_classes(example4_kernel());
  REQUIRE(oracle.size() == 1);
  CHECK(cls.recurrent_size == oracle[0].members.size());
  CHECK(c.transient_count == 1024 - oracle[0].members.size());
  CHECK(computed_classes(c) == oracle);
  CHECK(c.essentially_irreducible);
  CHECK_FALSE(c.irreducibility.irreducible);
  CHECK(to_string(c.irreducibility.reason) == "Prop 2 contraposition");
  CHECK(c.in_recurrent_class(0, w("0000000000")));
  CHECK_FALSE(c.in_recurrent_class(0, w("0000000101")));
}

TEST_CASE("classify: golden mean") {
  const Classification c = classify(golden_mean_kernel());
  REQUIRE(c.class_count() == 1);
  CHECK(c.classes[0].members == std::vector<std::uint64_t>{at("00"), at("01"), at("10")});
  CHECK(c.classes[0].period == 1);
  CHECK(c.transient_count == 1);
  CHECK(c.essentially_irreducible);
  CHECK_FALSE(c.irreducibility.irreducible);
}

TEST_CASE("classify: alternating chain has period 2 and is irreducible") {
  const Classification c = classify(alternating_kernel());
  REQUIRE(c.class_count() == 1);
  CHECK(c.classes[0].period == 2);
  CHECK(c.transient_count == 0);
  CHECK(c.irreducibility.irreducible);
  CHECK(c.irreducibility.reason == IrreducibilityReason::kSingleComponent);
}

TEST_CASE("classify: two absorbing states") {
  const Classification c = classify(two_absorbing_kernel());
  CHECK(c.class_count() == 2);
  CHECK_FALSE(c.essentially_irreducible);
  CHECK_FALSE(is_essentially_irreducible(two_absorbing_kernel()));
  CHECK_FALSE(is_essentially_irreducible(two_absorbing_kernel(), EssentialMethod::kMatrixSum));
  CHECK(c.irreducibility.reason == IrreducibilityReason::kSeveralComponents);
}

TEST_CASE("classify: full support is irreducible with reason K = 0") {
  const Classification c = classify(full_support_kernel(6, 3));
  CHECK(c.skeleton_order() == 0);
  REQUIRE(c.class_count() == 1);
  CHECK(c.classes[0].recurrent_size == 729);
  CHECK(c.transient_count == 0);
  CHECK(c.irreducibility.irreducible);
  CHECK(c.irreducibility.reason == IrreducibilityReason::kFullSupport);
}

TEST_CASE("a short prohibiting word at K = m rules out irreducibility") {
  // Order 2; "1" forbids 1 and "00", "10" under "0" differ, so K = 2.
  const Alphabet a = binary();
  const SupportKernel k(a, 2,
                        {Context{a.parse("1"), {1, 0}, std::nullopt}, Context{a.parse("00"), {0, 1}, std::nullopt}});
  const IrreducibilityVerdict v = is_irreducible(k);
  CHECK_FALSE(v.irreducible);
  CHECK(to_string(v.reason) == "Prop 3");
  CHECK(classify_brute_force(lift(k)).irreducibility.irreducible == false);
}

TEST_CASE("essential irreducibility: both methods on the example") {
  CHECK(is_essentially_irreducible(example4_kernel()));
  CHECK(is_essentially_irreducible(example4_kernel(), EssentialMethod::kMatrixSum));
}

TEST_CASE("recurrent class sizes overflow to nullopt instead of wrapping") {
  const Classification c = classify(full_support_kernel(70));
  REQUIRE(c.class_count() == 1);
  CHECK_FALSE(c.classes[0].recurrent_size.has_value());
  CHECK_FALSE(c.classes[0].members.has_value());
  CHECK_FALSE(c.transient_count.has_value());
  CHECK(c.irreducibility.irreducible);
}

TEST_CASE("enumerate cap suppresses member lists only") {
  const Classification c = classify(example4_kernel(), ClassifyOptions{100});
  CHECK_FALSE(c.classes[0].members.has_value());
  CHECK(c.classes[0].recurrent_size.has_value());
}

TEST_CASE("property: skeleton classification equals the literal oracle") {
  const double rates[] = {0.1, 0.3, 0.5, 0.7};
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const std::size_t m = 1 + (seed / 2) % 5;
    const SupportKernel k = random_kernel(n, m, rates[(seed / 10) % 4], seed);
    INFO("seed " << seed);
    const Classification c = classify(k);
    const auto oracle = oracle_classes(k);
    REQUIRE(computed_classes(c) == oracle);
    std::uint64_t recurrent = 0;
    for (const auto& cls : c.classes) {
      REQUIRE(cls.recurrent_size == cls.members->size());
      recurrent += *cls.recurrent_size;
    }
    REQUIRE(*c.transient_count + recurrent == ipow(n, m));
    REQUIRE(c.essentially_irreducible == (oracle.size() == 1));
    REQUIRE(c.essentially_irreducible == is_essentially_irreducible(k, EssentialMethod::kMatrixSum));
    // A word is in some recurrent class iff admissible and its head lies in a
    // closed class.
    for (const Word& x : all_words(n, m)) {
      bool in_any = false;
      for (std::size_t i = 0; i < c.class_count(); ++i) {
        const bool listed = std::binary_search(c.classes[i].members->begin(), c.classes[i].members->end(), rank(x, n));
        REQUIRE(c.in_recurrent_class(i, x) == listed);
        in_any = in_any || listed;
      }
      if (in_any) REQUIRE(is_admissible(*c.admissible, x));
    }
    // Irreducibility against strong connectivity of the literal lift.
    const bool oracle_irreducible = brute_scc_count(brute_lift(k)) == 1;
    REQUIRE(c.irreducibility.irreducible == oracle_irreducible);
    if (oracle_irreducible) {
      const std::size_t big_k = *c.skeleton_order();
      REQUIRE((big_k == 0 || big_k == m));
    }
  }
}

TEST_CASE("K = 0 with a restricted support vector is not irreducible") {
  const Alphabet a = binary();
  const SupportKernel k(a, 2, {}, SupportVector{1, 0});
  const Classification c = classify(k);
  CHECK(c.skeleton_order() == 0);
  REQUIRE(c.class_count() == 1);
  CHECK(c.classes[0].recurrent_size == 1);
  CHECK(c.transient_count == 3);
  CHECK(c.essentially_irreducible);
  CHECK_FALSE(c.irreducibility.irreducible);
  CHECK(c.irreducibility.reason == IrreducibilityReason::kShortProhibitingWord);
}
