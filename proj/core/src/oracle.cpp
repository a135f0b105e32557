#include "xsect/oracle.hpp"

#include <set>
#include <string>

namespace xsect::oracle {

namespace {

bool run(const Nfa& nfa, std::set<State> current, std::span<const SymbolId> word) {
  const std::vector<Nfa::Transition> triples = nfa.transitions();
  for (SymbolId a : word) {
    std::set<State> next;
    for (const auto& [from, symbol, to] : triples) {
      if (symbol == a && current.count(from) != 0) next.insert(to);
    }
    current = std::move(next);
  }
  for (State q : current) {
    if (nfa.is_final(q)) return true;
  }
  return false;
}

void check_budget(const Nfa& nfa, std::size_t length, const OracleConfig& config) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length && nfa.symbol_count() > 1; ++i) {
    total *= nfa.symbol_count();
    if (total > config.max_enumeration) {
      throw LimitExceeded("brute force over |Σ|^" + std::to_string(length) + " words exceeds the cap of " +
                          std::to_string(config.max_enumeration));
    }
  }
}

// Odometer over Σ^length in lexicographic order; stops early when visit
// returns false.
template <typename Visit>
void for_each_word(std::size_t sigma, std::size_t length, Visit visit) {
  if (sigma == 0 && length > 0) return;
  Word w(length, 0);
  while (true) {
    if (!visit(static_cast<const Word&>(w))) return;
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == sigma) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace

bool member(const Nfa& nfa, std::span<const SymbolId> word) {
  return run(nfa, std::set<State>(nfa.initial().begin(), nfa.initial().end()), word);
}

bool accepts_from(const Nfa& nfa, State q, std::span<const SymbolId> word) { return run(nfa, {q}, word); }

std::vector<Word> cross_section_bruteforce(const Nfa& nfa, std::size_t length, OracleConfig config) {
  check_budget(nfa, length, config);
  std::vector<Word> out;
  for_each_word(nfa.symbol_count(), length, [&](const Word& w) {
    if (member(nfa, w)) out.push_back(w);
    return true;
  });
  return out;
}

std::optional<Word> min_word_oracle(const Nfa& nfa, State q, std::size_t k, OracleConfig config) {
  check_budget(nfa, k, config);
  std::optional<Word> found;
  for_each_word(nfa.symbol_count(), k, [&](const Word& w) {
    if (accepts_from(nfa, q, w)) found = w;
    return !found;
  });
  return found;
}

}  // namespace xsect::oracle
