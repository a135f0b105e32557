#pragma once

#include <cstddef>
#include <cstdint>

#include "xsect/nfa.hpp"

namespace xsect {

struct RandomNfaSpec {
  std::size_t states = 4;
  std::size_t symbols = 2;
  // Distinct transitions; clamped to states * symbols * states.
  std::size_t transitions = 8;
  std::size_t initial = 1;
  std::size_t finals = 1;
};

// Deterministic for a given (spec, seed) on every platform: uses
// std::mt19937_64 with plain modular reduction, no std distributions.
// Symbols print as a, b, c, ...
Nfa random_nfa(const RandomNfaSpec& spec, std::uint64_t seed);

}  // namespace xsect
