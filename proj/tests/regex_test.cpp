#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <regex>

#include "support/fixtures.hpp"
#include "xsect/automaton_text.hpp"
#include "xsect/enumerate.hpp"
#include "xsect/oracle.hpp"
#include "xsect/regex.hpp"

namespace xsect {
namespace {

std::vector<std::string> section(const Nfa& nfa, std::size_t len) {
  std::vector<std::string> out;
  for (const Word& x : oracle::cross_section_bruteforce(nfa, len)) out.push_back(format_word(nfa, x));
  return out;
}

TEST(CompileRegex, SameLanguageAsA1) {
  const Nfa re = compile_regex("a*ba*");
  const Nfa a1 = testing::make_a1();
  for (std::size_t len = 0; len <= 5; ++len) EXPECT_EQ(section(re, len), section(a1, len)) << len;
}

TEST(CompileRegex, Alternation) { EXPECT_EQ(section(compile_regex("a|b"), 1), (std::vector<std::string>{"a", "b"})); }

TEST(CompileRegex, StarAcceptsEpsilon) { EXPECT_EQ(section(compile_regex("a*"), 0), (std::vector<std::string>{""})); }

TEST(CompileRegex, AlphabetInCodePointOrder) {
  const Nfa nfa = compile_regex("cab");
  ASSERT_EQ(nfa.symbol_count(), 3u);
  EXPECT_EQ(nfa.alphabet()[0], U'a');
  EXPECT_EQ(nfa.alphabet()[2], U'c');
}

TEST(CompileRegex, EscapesAndEmptyAlternatives) {
  EXPECT_EQ(section(compile_regex("\\*|"), 0), (std::vector<std::string>{""}));
  EXPECT_EQ(section(compile_regex("\\*|"), 1), (std::vector<std::string>{"*"}));
  EXPECT_EQ(section(compile_regex("()"), 0), (std::vector<std::string>{""}));
  EXPECT_EQ(compile_regex("").symbol_count(), 0u);
}

TEST(CompileRegex, ResultHasNoEpsilonAndSortedAdjacency) {
  const Nfa nfa = compile_regex("(ab|a)*(b+|c?)");
  for (State q = 0; q < nfa.state_count(); ++q) {
    const auto edges = nfa.edges(q);
    for (std::size_t i = 1; i < edges.size(); ++i) EXPECT_LT(edges[i - 1].symbol, edges[i].symbol);
  }
}

TEST(CompileRegex, SyntaxErrorsCarryPosition) {
  auto pos = [](const char* p) -> std::size_t {
    try {
      compile_regex(p);
    } catch (const RegexError& e) {
      return e.position();
    }
    return 999;
  };
  EXPECT_EQ(pos("(ab"), 0u);
  EXPECT_EQ(pos("ab)"), 2u);
  EXPECT_EQ(pos("*a"), 0u);
  EXPECT_EQ(pos("a|+"), 2u);
  EXPECT_EQ(pos("ab\\"), 2u);
}

// Random patterns over {a,b,c}: the compiled automaton's radix enumeration
// equals brute force filtered through std::regex.
std::string random_pattern(std::mt19937& rng, int depth) {
  const int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 7);
  switch (pick) {
    case 0:
      return std::string(1, static_cast<char>('a' + rng() % 3));
    case 1:
      return "";
    case 2:
    case 3:
      return random_pattern(rng, depth - 1) + random_pattern(rng, depth - 1);
    case 4:
      return "(" + random_pattern(rng, depth - 1) + "|" + random_pattern(rng, depth - 1) + ")";
    default: {
      const char* ops = "*+?";
      return "(" + random_pattern(rng, depth - 1) + ")" + ops[rng() % 3];
    }
  }
}

TEST(CompileRegex, AgreesWithStdRegex) {
  std::mt19937 rng(2024);
  const std::string letters = "abc";
  for (int round = 0; round < 300; ++round) {
    const std::string pattern = random_pattern(rng, 4);
    const std::regex reference(pattern.empty() ? std::string("()") : pattern);
    auto nfa = std::make_shared<const Nfa>(compile_regex(pattern));

    std::vector<std::string> expected;
    std::vector<std::string> frontier{""};
    for (std::size_t len = 0; len <= 5; ++len) {
      std::vector<std::string> next;
      for (const std::string& s : frontier) {
        bool in_alphabet = true;
        for (char c : s) in_alphabet = in_alphabet && nfa->find_symbol(static_cast<char32_t>(c)).has_value();
        if (in_alphabet && std::regex_match(s, reference)) expected.push_back(s);
        for (char c : letters) next.push_back(s + c);
      }
      frontier = std::move(next);
    }
    // Radix order over the automaton's own alphabet (code-point order, so
    // plain string comparison within a length agrees).
    std::stable_sort(expected.begin(), expected.end(),
                     [](const std::string& x, const std::string& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });

    RadixCursor cursor(nfa, {5, std::nullopt});
    std::vector<std::string> got;
    while (auto word = cursor.next()) got.push_back(format_word(*nfa, *word));
    ASSERT_EQ(got, expected) << "pattern '" << pattern << "'";
  }
}

}  // namespace
}  // namespace xsect
