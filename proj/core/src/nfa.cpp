#include "xsect/nfa.hpp"

#include <limits>

#include "xsect/instrument.hpp"

namespace xsect {

namespace {

std::string state_error(const char* what, State q, std::size_t state_count) {
  return std::string(what) + " state " + std::to_string(q) + " out of range (automaton has " +
         std::to_string(state_count) + " states)";
}

}  // namespace

Nfa Nfa::build(std::vector<char32_t> alphabet, std::size_t state_count, std::span<const State> initial,
               std::span<const State> final_states, std::span<const Transition> transitions) {
  if (state_count > std::numeric_limits<State>::max() || alphabet.size() > std::numeric_limits<SymbolId>::max() - 1 ||
      transitions.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw NfaError("automaton too large");
  }

  Nfa nfa;
  nfa.state_count_ = state_count;
  nfa.glyph_to_id_.reserve(alphabet.size());
  for (SymbolId id = 0; id < alphabet.size(); ++id) {
    if (!nfa.glyph_to_id_.emplace(alphabet[id], id).second) {
      throw NfaError("duplicate symbol in alphabet (position " + std::to_string(id) + ")");
    }
  }
  nfa.alphabet_ = std::move(alphabet);
  const std::size_t sigma = nfa.alphabet_.size();

  nfa.final_flag_.assign(state_count, 0);
  instrument::tick(state_count);
  for (State q : final_states) {
    if (q >= state_count) throw NfaError(state_error("final", q, state_count));
    if (nfa.final_flag_[q] == 0) {
      nfa.final_flag_[q] = 1;
      nfa.final_list_.push_back(q);
    }
  }
  {
    std::vector<unsigned char> seen(state_count, 0);
    for (State q : initial) {
      if (q >= state_count) throw NfaError(state_error("initial", q, state_count));
      if (seen[q] == 0) {
        seen[q] = 1;
        nfa.initial_.push_back(q);
      }
    }
  }
  for (const Transition& t : transitions) {
    if (t.from >= state_count) throw NfaError(state_error("transition source", t.from, state_count));
    if (t.to >= state_count) throw NfaError(state_error("transition target", t.to, state_count));
    if (t.symbol >= sigma) {
      throw NfaError("transition symbol id " + std::to_string(t.symbol) + " out of range (alphabet has " +
                     std::to_string(sigma) + " symbols)");
    }
  }

  // Two stable counting-sort passes (by symbol, then by source) give the
  // triples grouped by source with symbols ascending: O(|Δ| + |Σ| + |Q|).
  const std::size_t m = transitions.size();
  std::vector<std::uint32_t> by_symbol(m);
  {
    std::vector<std::uint32_t> start(sigma + 1, 0);
    for (const Transition& t : transitions) ++start[t.symbol + 1];
    for (std::size_t a = 0; a < sigma; ++a) start[a + 1] += start[a];
    for (std::uint32_t i = 0; i < m; ++i) by_symbol[start[transitions[i].symbol]++] = i;
  }
  std::vector<std::uint32_t> order(m);
  std::vector<std::uint32_t> state_start(state_count + 1, 0);
  for (const Transition& t : transitions) ++state_start[t.from + 1];
  for (std::size_t q = 0; q < state_count; ++q) state_start[q + 1] += state_start[q];
  {
    std::vector<std::uint32_t> fill(state_start.begin(), state_start.end() - 1);
    for (std::uint32_t i : by_symbol) order[fill[transitions[i].from]++] = i;
  }
  instrument::tick(3 * m + sigma + state_count);

  // Group per (source, symbol) and drop repeated targets. `stamp[q]` holds
  // the number of the last group that emitted q.
  constexpr std::uint32_t kNoGroup = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> stamp(state_count, kNoGroup);
  nfa.edge_offset_.assign(state_count + 1, 0);
  nfa.targets_.reserve(m);
  std::uint32_t group = 0;
  for (State q = 0; q < state_count; ++q) {
    nfa.edge_offset_[q] = static_cast<std::uint32_t>(nfa.edges_.size());
    for (std::uint32_t pos = state_start[q]; pos < state_start[q + 1];) {
      const SymbolId a = transitions[order[pos]].symbol;
      Edge edge{a, static_cast<std::uint32_t>(nfa.targets_.size()), 0};
      for (; pos < state_start[q + 1] && transitions[order[pos]].symbol == a; ++pos) {
        const State to = transitions[order[pos]].to;
        if (stamp[to] != group) {
          stamp[to] = group;
          nfa.targets_.push_back(to);
        }
      }
      edge.last = static_cast<std::uint32_t>(nfa.targets_.size());
      nfa.edges_.push_back(edge);
      ++group;
    }
  }
  nfa.edge_offset_[state_count] = static_cast<std::uint32_t>(nfa.edges_.size());
  instrument::tick(m + state_count);

  // index_[q][a] = first edge of Δ(q) with symbol >= a, for a in 0..|Σ|.
  nfa.index_.resize(state_count * (sigma + 1));
  for (State q = 0; q < state_count; ++q) {
    std::uint32_t e = nfa.edge_offset_[q];
    const std::uint32_t stop = nfa.edge_offset_[q + 1];
    for (SymbolId a = 0; a <= sigma; ++a) {
      while (e < stop && nfa.edges_[e].symbol < a) ++e;
      nfa.index_[q * (sigma + 1) + a] = e;
    }
  }
  instrument::tick(state_count * (sigma + 1) + nfa.edges_.size());

  return nfa;
}

std::optional<SymbolId> Nfa::find_symbol(char32_t glyph) const {
  if (auto it = glyph_to_id_.find(glyph); it != glyph_to_id_.end()) return it->second;
  return std::nullopt;
}

std::span<const State> Nfa::targets(State q, SymbolId a) const {
  const std::uint32_t e = index_[q * (alphabet_.size() + 1) + a];
  if (e == edge_offset_[q + 1] || edges_[e].symbol != a) return {};
  return targets(edges_[e]);
}

std::vector<Nfa::Transition> Nfa::transitions() const {
  std::vector<Transition> out;
  out.reserve(targets_.size());
  for (State q = 0; q < state_count_; ++q) {
    for (const Edge& e : edges(q)) {
      for (State to : targets(e)) out.push_back({q, e.symbol, to});
    }
  }
  return out;
}

SparseStateSet Nfa::initial_set() const {
  SparseStateSet set(state_count_);
  for (State q : initial_) set.insert(q);
  return set;
}

void delta_step(const Nfa& nfa, const SparseStateSet& from, SymbolId a, SparseStateSet& into) {
  for (State q : from) {
    instrument::tick();
    for (State to : nfa.targets(q, a)) into.insert(to);
  }
}

}  // namespace xsect
