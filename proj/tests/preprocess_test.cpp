#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "xsect/instrument.hpp"
#include "xsect/oracle.hpp"
#include "xsect/preprocess.hpp"

namespace xsect {
namespace {

using testing::make_a1;
using testing::str;

TEST(Preprocess, A1MinArrow) {
  const Tables t = preprocess(make_a1(), 2);
  EXPECT_TRUE(t.min_arrow.at(0, 0).is_bottom());
  EXPECT_TRUE(t.min_arrow.at(0, 1).is_epsilon());
  EXPECT_EQ(t.min_arrow.at(1, 0), MinArrowEntry::arrow(1, 1));
  EXPECT_EQ(t.min_arrow.at(1, 1), MinArrowEntry::arrow(0, 1));
  EXPECT_EQ(t.min_arrow.at(2, 0), MinArrowEntry::arrow(0, 0));
  EXPECT_EQ(t.min_arrow.at(2, 1), MinArrowEntry::arrow(0, 1));
  EXPECT_EQ(str(spell_min_arrow_chain(t.min_arrow, 2, 0)), "ab");
  EXPECT_EQ(str(spell_min_arrow_chain(t.min_arrow, 2, 1)), "aa");
  EXPECT_EQ(str(spell_min_arrow_chain(t.min_arrow, 1, 0)), "b");
}

TEST(Preprocess, A1Comp) {
  const Tables t = preprocess(make_a1(), 2);
  EXPECT_TRUE(t.comp.at(1, 1, 0));
  EXPECT_FALSE(t.comp.at(1, 0, 1));
  for (State q2 = 0; q2 < 2; ++q2) {
    EXPECT_TRUE(t.comp.at(0, 1, q2));
    EXPECT_FALSE(t.comp.at(0, 0, q2));
  }
}

TEST(Preprocess, LengthZeroHasOnlyLevelZero) {
  const Tables t = preprocess(make_a1(), 0);
  EXPECT_EQ(t.length(), 0u);
  EXPECT_EQ(t.min_arrow.bytes().size(), 2 * sizeof(MinArrowEntry));
  EXPECT_TRUE(t.min_arrow.at(0, 1).is_epsilon());
}

TEST(Preprocess, NoFinalStatesMeansAllBottom) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomNfaSpec spec{5, 2, 12, 2, 0};
    const Nfa nfa = random_nfa(spec, seed);
    const Tables t = preprocess(nfa, 4);
    for (std::size_t k = 0; k <= 4; ++k) {
      for (State q = 0; q < 5; ++q) {
        ASSERT_TRUE(t.min_arrow.at(k, q).is_bottom());
        for (State q2 = 0; q2 < 5; ++q2) ASSERT_FALSE(t.comp.at(k, q, q2));
      }
    }
  }
}

// Chains spell w_{k,q}; Comp equals the ≤ₖ predicate; chains never dangle.
TEST(Preprocess, TablesMatchBruteForce) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Nfa nfa = testing::desk_scale_nfa(seed);
    const std::size_t length = 7;
    const Tables t = preprocess(nfa, length);
    const std::size_t n = nfa.state_count();
    for (std::size_t k = 0; k <= length; ++k) {
      std::vector<std::optional<Word>> least(n);
      for (State q = 0; q < n; ++q) least[q] = oracle::min_word_oracle(nfa, q, k);
      for (State q = 0; q < n; ++q) {
        const MinArrowEntry e = t.min_arrow.at(k, q);
        ASSERT_EQ(e.is_bottom(), !least[q].has_value()) << "seed " << seed << " k " << k << " q " << q;
        if (k == 0) ASSERT_EQ(e.is_epsilon(), nfa.is_final(q));
        if (k > 0) ASSERT_FALSE(e.is_epsilon());
        if (e.is_arrow()) {
          ASSERT_FALSE(t.min_arrow.at(k - 1, e.target).is_bottom());
          ASSERT_EQ(spell_min_arrow_chain(t.min_arrow, k, q), *least[q]);
        }
        for (State q2 = 0; q2 < n; ++q2) {
          const bool expected = least[q].has_value() && (!least[q2].has_value() || *least[q] <= *least[q2]);
          ASSERT_EQ(t.comp.at(k, q, q2), expected) << "seed " << seed << " k " << k;
        }
      }
    }
  }
}

// Work spent filling MinArrow (total minus the fixed table and Comp costs)
// stays within a constant multiple of ℓ·|Δ|.
TEST(Preprocess, MinArrowFillIsLinearInLengthTimesDelta) {
  for (std::size_t transitions : {40u, 80u, 160u, 320u}) {
    for (std::size_t length : {3u, 6u, 12u}) {
      RandomNfaSpec spec{16, 4, transitions, 2, 4};
      const Nfa nfa = random_nfa(spec, transitions * 31 + length);
      const std::size_t n = nfa.state_count();
      instrument::ScopedCounting on;
      instrument::reset();
      const Tables t = preprocess(nfa, length);
      const std::uint64_t total = instrument::read();

      std::uint64_t fixed = (length + 1) * (n + n * n) + nfa.final_states().size() * (1 + n);
      for (std::size_t k = 1; k <= length; ++k) {
        for (State q = 0; q < n; ++q) fixed += t.min_arrow.at(k, q).is_bottom() ? n : 2 * n;
      }
      ASSERT_GE(total, fixed);
      const double ratio = static_cast<double>(total - fixed) / static_cast<double>(length * nfa.transition_count());
      EXPECT_LE(ratio, 3.0) << "|Δ|=" << nfa.transition_count() << " ℓ=" << length;
    }
  }
}

}  // namespace
}  // namespace xsect
