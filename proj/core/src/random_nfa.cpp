#include "xsect/random_nfa.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

namespace xsect {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

// k distinct values from 0..n-1 (partial Fisher-Yates when dense, rejection
// when sparse).
std::vector<std::uint64_t> sample(std::mt19937_64& rng, std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n);
  std::vector<std::uint64_t> out;
  out.reserve(k);
  if (k * 4 >= n) {
    std::vector<std::uint64_t> all(n);
    for (std::uint64_t i = 0; i < n; ++i) all[i] = i;
    for (std::uint64_t i = 0; i < k; ++i) std::swap(all[i], all[i + below(rng, n - i)]);
    out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < k) {
      const std::uint64_t v = below(rng, n);
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  return out;
}

char32_t glyph_for(std::size_t i) {
  return i < 26 ? static_cast<char32_t>(U'a' + i) : static_cast<char32_t>(0x100 + i);
}

}  // namespace

Nfa random_nfa(const RandomNfaSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t n = spec.states;
  const std::uint64_t sigma = spec.symbols;

  std::vector<char32_t> alphabet;
  for (std::size_t i = 0; i < sigma; ++i) alphabet.push_back(glyph_for(i));

  std::vector<Nfa::Transition> transitions;
  for (std::uint64_t code : sample(rng, n * sigma * n, spec.transitions)) {
    const auto from = static_cast<State>(code / (sigma * n));
    const auto a = static_cast<SymbolId>((code / n) % sigma);
    const auto to = static_cast<State>(code % n);
    transitions.push_back({from, a, to});
  }
  std::vector<State> initial;
  for (std::uint64_t q : sample(rng, n, spec.initial)) initial.push_back(static_cast<State>(q));
  std::vector<State> finals;
  for (std::uint64_t q : sample(rng, n, spec.finals)) finals.push_back(static_cast<State>(q));

  return Nfa::build(std::move(alphabet), spec.states, initial, finals, transitions);
}

}  // namespace xsect
