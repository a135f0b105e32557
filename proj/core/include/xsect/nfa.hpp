#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "xsect/state_set.hpp"
#include "xsect/types.hpp"

namespace xsect {

class NfaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Symbol {
  SymbolId id;
  char32_t glyph;
};

// Nondeterministic finite automaton without epsilon transitions.
//
// Layout: for every state q, edges(q) lists the pairs (a, targets) of Δ(q) in
// strictly increasing symbol order, with non-empty duplicate-free target
// lists. An additional |Q| x (|Σ|+1) index gives O(1) access to Δ(q, a) and
// to the first pair of Δ(q) whose symbol is >= a.
//
// Immutable once built.
class Nfa {
 public:
  struct Transition {
    State from;
    SymbolId symbol;
    State to;
    friend bool operator==(const Transition&, const Transition&) = default;
  };

  struct Edge {
    SymbolId symbol;
    std::uint32_t first;  // range into the shared target pool
    std::uint32_t last;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  // The empty automaton: no symbols, no states.
  Nfa() = default;

  // Validates and normalises raw input. Duplicate transitions are collapsed.
  // Throws NfaError on out-of-range references or duplicate glyphs.
  static Nfa build(std::vector<char32_t> alphabet, std::size_t state_count,
                   std::span<const State> initial, std::span<const State> final_states,
                   std::span<const Transition> transitions);

  [[nodiscard]] std::size_t state_count() const noexcept { return state_count_; }
  [[nodiscard]] std::size_t symbol_count() const noexcept { return alphabet_.size(); }
  // |Δ| after duplicate collapse.
  [[nodiscard]] std::size_t transition_count() const noexcept { return targets_.size(); }

  [[nodiscard]] std::span<const char32_t> alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] Symbol symbol(SymbolId id) const { return {id, alphabet_.at(id)}; }
  [[nodiscard]] std::optional<SymbolId> find_symbol(char32_t glyph) const;

  [[nodiscard]] std::span<const State> initial() const noexcept { return initial_; }
  [[nodiscard]] std::span<const State> final_states() const noexcept { return final_list_; }
  [[nodiscard]] bool is_final(State q) const { return final_flag_[q] != 0; }

  // Δ(q), sorted by increasing symbol.
  [[nodiscard]] std::span<const Edge> edges(State q) const {
    return std::span<const Edge>(edges_).subspan(edge_offset_[q], edge_offset_[q + 1] - edge_offset_[q]);
  }
  // Suffix of Δ(q) holding the pairs with symbol >= a. Requires a <= |Σ|.
  [[nodiscard]] std::span<const Edge> edges_from(State q, SymbolId a) const {
    const std::uint32_t first = index_[q * (alphabet_.size() + 1) + a];
    return std::span<const Edge>(edges_).subspan(first, edge_offset_[q + 1] - first);
  }
  [[nodiscard]] std::span<const State> targets(const Edge& e) const {
    return std::span<const State>(targets_).subspan(e.first, e.last - e.first);
  }
  // Δ(q, a); empty when there is no such transition.
  [[nodiscard]] std::span<const State> targets(State q, SymbolId a) const;

  // Normalised transition triples, ordered by (from, symbol, insertion order).
  [[nodiscard]] std::vector<Transition> transitions() const;

  // A fresh set holding I.
  [[nodiscard]] SparseStateSet initial_set() const;

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::vector<char32_t> alphabet_;
  std::unordered_map<char32_t, SymbolId> glyph_to_id_;
  std::size_t state_count_ = 0;
  std::vector<State> initial_;
  std::vector<State> final_list_;
  std::vector<unsigned char> final_flag_;
  std::vector<std::uint32_t> edge_offset_{0};
  std::vector<Edge> edges_;
  std::vector<State> targets_;
  std::vector<std::uint32_t> index_;
};

// into := Δ(from, a). `into` must be empty on entry.
void delta_step(const Nfa& nfa, const SparseStateSet& from, SymbolId a, SparseStateSet& into);

}  // namespace xsect
