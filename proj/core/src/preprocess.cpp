#include "xsect/preprocess.hpp"

#include <cassert>

#include "xsect/instrument.hpp"

namespace xsect {

MinArrowTable::MinArrowTable(std::size_t length, std::size_t state_count)
    : length_(length), states_(state_count), cells_((length + 1) * state_count, MinArrowEntry::bottom()) {
  instrument::tick(cells_.size());
}

CompTable::CompTable(std::size_t length, std::size_t state_count)
    : length_(length), states_(state_count), cells_((length + 1) * state_count * state_count, 0) {
  instrument::tick(cells_.size());
}

Tables preprocess(const Nfa& nfa, std::size_t length) {
  const std::size_t n = nfa.state_count();
  Tables tables{MinArrowTable(length, n), CompTable(length, n)};
  MinArrowTable& min_arrow = tables.min_arrow;
  CompTable& comp = tables.comp;

  for (State q : nfa.final_states()) {
    min_arrow.at(0, q) = MinArrowEntry::epsilon();
    for (State q2 = 0; q2 < n; ++q2) comp.set(0, q, q2, true);
    instrument::tick(1 + n);
  }

  for (std::size_t k = 1; k <= length; ++k) {
    for (State q = 0; q < n; ++q) {
      for (const Nfa::Edge& edge : nfa.edges(q)) {
        const auto targets = nfa.targets(edge);
        State q_min = targets.front();
        for (State q2 : targets) {
          instrument::tick();
          if (comp.at(k - 1, q2, q_min)) q_min = q2;
        }
        instrument::tick();
        if (!min_arrow.at(k - 1, q_min).is_bottom()) {
          min_arrow.at(k, q) = MinArrowEntry::arrow(edge.symbol, q_min);
          instrument::tick();
          // Δ(q) is sorted by symbol, so this is the least usable letter.
          break;
        }
      }
    }

    for (State q = 0; q < n; ++q) {
      const MinArrowEntry t = min_arrow.at(k, q);
      if (t.is_bottom()) {
        instrument::tick(n);
        continue;
      }
      for (State q2 = 0; q2 < n; ++q2) {
        const MinArrowEntry t2 = min_arrow.at(k, q2);
        instrument::tick(2);
        bool below = false;
        if (t2.is_bottom()) {
          below = true;
        } else {
          assert(t.is_arrow() && t2.is_arrow());
          below = t.symbol < t2.symbol || (t.symbol == t2.symbol && comp.at(k - 1, t.target, t2.target));
        }
        if (below) comp.set(k, q, q2, true);
      }
    }
  }
  return tables;
}

Word spell_min_arrow_chain(const MinArrowTable& min_arrow, std::size_t k, State q) {
  Word word;
  word.reserve(k);
  for (MinArrowEntry e = min_arrow.at(k, q); !e.is_epsilon(); e = min_arrow.at(k, q)) {
    assert(e.is_arrow());
    instrument::tick();
    word.push_back(e.symbol);
    q = e.target;
    --k;
  }
  return word;
}

}  // namespace xsect
