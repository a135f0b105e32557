#pragma once

#include <cstdint>
#include <vector>

namespace xsect {

// States are the dense range 0..|Q|-1.
using State = std::uint32_t;

// Ordinal of a symbol in the alphabet. The lexicographic order on words is the
// order of these ids, which is the alphabet's declaration order.
using SymbolId = std::uint32_t;

using Word = std::vector<SymbolId>;

}  // namespace xsect
