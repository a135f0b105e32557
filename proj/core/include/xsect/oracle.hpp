#pragma once

// Brute-force reference semantics for validating the tables and the cursors.
// Word generation followed by naive subset simulation: shares nothing with
// preprocess/enumerate except the automaton type.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "xsect/nfa.hpp"

namespace xsect::oracle {

struct OracleConfig {
  // Upper bound on |Σ|^ℓ for the exhaustive loops.
  std::uint64_t max_enumeration = 1'000'000;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool member(const Nfa& nfa, std::span<const SymbolId> word);
bool accepts_from(const Nfa& nfa, State q, std::span<const SymbolId> word);

// All accepted words of length ℓ, lexicographically sorted.
std::vector<Word> cross_section_bruteforce(const Nfa& nfa, std::size_t length, OracleConfig config = {});

// Least word of length k accepted from q.
std::optional<Word> min_word_oracle(const Nfa& nfa, State q, std::size_t k, OracleConfig config = {});

}  // namespace xsect::oracle
