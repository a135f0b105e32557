#pragma once

// Shared test fixtures: the worked automaton A1, a serializer for the text
// format, and the random corpus used by the property and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xsect/nfa.hpp"
#include "xsect/random_nfa.hpp"
#include "xsect/utf8.hpp"

namespace xsect::testing {

// Σ = [a, b], Q = {0, 1}, I = {0}, F = {1}, L = a*ba*.
inline Nfa make_a1() {
  const std::vector<State> initial{0};
  const std::vector<State> finals{1};
  const std::vector<Nfa::Transition> delta{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}};
  return Nfa::build({U'a', U'b'}, 2, initial, finals, delta);
}

inline const char* kA1Text =
    "# comment lines allowed anywhere\n"
    "alphabet a b          # symbol order = lexicographic order\n"
    "states 2\n"
    "initial 0             # zero or more states, space-separated\n"
    "final 1\n"
    "0 a 0                 # transition lines: from symbol to\n"
    "0 b 1\n"
    "1 a 1\n";

// Words over A1's alphabet written as strings of a/b.
inline Word w(const std::string& s) {
  Word out;
  for (char c : s) out.push_back(static_cast<SymbolId>(c - 'a'));
  return out;
}

inline std::string str(const Word& word) {
  std::string s;
  for (SymbolId a : word) s.push_back(static_cast<char>('a' + a));
  return s;
}

inline std::string serialize_automaton(const Nfa& nfa) {
  std::string out = "alphabet";
  for (char32_t g : nfa.alphabet()) {
    out += ' ';
    utf8::append(out, g);
  }
  out += "\nstates " + std::to_string(nfa.state_count()) + "\ninitial";
  for (State q : nfa.initial()) out += ' ' + std::to_string(q);
  out += "\nfinal";
  for (State q : nfa.final_states()) out += ' ' + std::to_string(q);
  out += '\n';
  for (const auto& t : nfa.transitions()) {
    out += std::to_string(t.from) + ' ';
    utf8::append(out, nfa.alphabet()[t.symbol]);
    out += ' ' + std::to_string(t.to) + '\n';
  }
  return out;
}

// Desk-scale random automaton: |Q| in 1..6, |Σ| in 1..3, up to 1.5·|Q|·|Σ|
// transitions, random initial and final sets (possibly empty).
inline Nfa desk_scale_nfa(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  RandomNfaSpec spec;
  spec.states = 1 + rng() % 6;
  spec.symbols = 1 + rng() % 3;
  spec.transitions = rng() % (3 * spec.states * spec.symbols / 2 + 1);
  spec.initial = rng() % 4 == 0 ? rng() % (spec.states + 1) : 1 + rng() % spec.states;
  spec.finals = rng() % (spec.states + 1);
  return random_nfa(spec, rng());
}

}  // namespace xsect::testing
