#include "xsect/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

#include "xsect/instrument.hpp"

namespace xsect {

namespace {

// Appends the least word of length k accepted from some state of `from`.
// One pass over `from` both detects the all-bottom case and selects q_min.
bool append_min_word(std::size_t k, const SparseStateSet& from, const Tables& tables, Word& out) {
  if (from.empty()) return false;
  const MinArrowTable& min_arrow = tables.min_arrow;
  bool any = false;
  State q_min = from.front();
  for (State q : from) {
    instrument::tick(2);
    any = any || !min_arrow.at(k, q).is_bottom();
    if (tables.comp.at(k, q, q_min)) q_min = q;
  }
  if (!any) return false;

  for (MinArrowEntry e = min_arrow.at(k, q_min); !e.is_epsilon(); e = min_arrow.at(k, q_min)) {
    assert(e.is_arrow());
    instrument::tick();
    out.push_back(e.symbol);
    q_min = e.target;
    --k;
  }
  return true;
}

// Cursor into the not-yet-merged part of one Δ(q).
struct EdgeRun {
  const Nfa::Edge* next;
  const Nfa::Edge* end;
};

struct LaterSymbol {
  bool operator()(const EdgeRun& x, const EdgeRun& y) const noexcept { return x.next->symbol > y.next->symbol; }
};

}  // namespace

SparseStateSet RunStack::pop() {
  if (levels_.empty()) throw std::logic_error("pop from empty RunStack");
  SparseStateSet top = std::move(levels_.back());
  levels_.pop_back();
  return top;
}

std::optional<Word> min_word(std::size_t k, const SparseStateSet& from, const Tables& tables) {
  if (k > tables.length()) throw std::out_of_range("min_word: length exceeds preprocessed tables");
  Word w;
  w.reserve(k);
  if (!append_min_word(k, from, tables, w)) return std::nullopt;
  return w;
}

RunStack build_stack(std::span<const SymbolId> word, const Nfa& nfa) {
  RunStack stack;
  stack.push(nfa.initial_set());
  for (SymbolId a : word) {
    SparseStateSet next(nfa.state_count());
    delta_step(nfa, stack.top(), a, next);
    stack.push(std::move(next));
  }
  return stack;
}

std::optional<Word> next_word(std::span<const SymbolId> word, const Nfa& nfa, RunStack stack, const Tables& tables,
                              SparseStateSet& scratch) {
  const std::size_t length = word.size();
  if (stack.size() != length + 1) throw std::invalid_argument("next_word: stack does not match word length");
  if (length > tables.length()) throw std::invalid_argument("next_word: word longer than preprocessed tables");
  assert(scratch.empty());

  // S[ℓ] is never a restart point: replacing position i needs S[i].
  stack.pop();

  std::vector<EdgeRun> heads;
  Word tail;
  for (std::size_t i = length; i-- > 0;) {
    const SparseStateSet cur = stack.pop();

    // Merge the parts of Δ(q), q ∈ cur, with symbols > word[i]. Every pair is
    // visited once per position, in increasing symbol order.
    heads.clear();
    for (State q : cur) {
      instrument::tick();
      const auto run = nfa.edges_from(q, word[i] + 1);
      if (!run.empty()) heads.push_back({run.data(), run.data() + run.size()});
    }
    std::make_heap(heads.begin(), heads.end(), LaterSymbol{});
    instrument::tick(heads.size());

    while (!heads.empty()) {
      const SymbolId a = heads.front().next->symbol;
      while (!heads.empty() && heads.front().next->symbol == a) {
        std::pop_heap(heads.begin(), heads.end(), LaterSymbol{});
        EdgeRun& run = heads.back();
        instrument::tick();
        for (State to : nfa.targets(*run.next)) scratch.insert(to);
        if (++run.next != run.end) {
          std::push_heap(heads.begin(), heads.end(), LaterSymbol{});
        } else {
          heads.pop_back();
        }
      }

      tail.clear();
      const bool found = append_min_word(length - i - 1, scratch, tables, tail);
      scratch.clear();
      if (found) {
        Word result;
        result.reserve(length);
        result.insert(result.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        result.push_back(a);
        result.insert(result.end(), tail.begin(), tail.end());
        instrument::tick(length);
        return result;
      }
    }
  }
  return std::nullopt;
}

CrossSectionCursor::CrossSectionCursor(std::shared_ptr<const Nfa> nfa, std::size_t length)
    : nfa_(std::move(nfa)), length_(length) {
  if (!nfa_) throw std::invalid_argument("CrossSectionCursor: null automaton");
}

CrossSectionCursor::CrossSectionCursor(std::shared_ptr<const Nfa> nfa, std::shared_ptr<const Tables> tables)
    : nfa_(std::move(nfa)), tables_(std::move(tables)), length_(0) {
  if (!nfa_ || !tables_) throw std::invalid_argument("CrossSectionCursor: null automaton or tables");
  if (tables_->min_arrow.state_count() != nfa_->state_count()) {
    throw std::invalid_argument("CrossSectionCursor: tables were built for a different automaton");
  }
  length_ = tables_->length();
}

void CrossSectionCursor::prepare() {
  if (!tables_) tables_ = std::make_shared<const Tables>(preprocess(*nfa_, length_));
}

std::optional<Word> CrossSectionCursor::next() {
  switch (phase_) {
    case Phase::kExhausted:
      return std::nullopt;
    case Phase::kStart: {
      prepare();
      scratch_ = SparseStateSet(nfa_->state_count());
      current_ = min_word(length_, nfa_->initial_set(), *tables_);
      break;
    }
    case Phase::kRunning: {
      current_ = next_word(*current_, *nfa_, build_stack(*current_, *nfa_), *tables_, scratch_);
      break;
    }
  }
  phase_ = current_ ? Phase::kRunning : Phase::kExhausted;
  return current_;
}

void CrossSectionCursor::resume_after(Word word) {
  if (word.size() != length_) throw std::invalid_argument("resume_after: word has the wrong length");
  for (SymbolId a : word) {
    if (a >= nfa_->symbol_count()) throw std::invalid_argument("resume_after: symbol out of range");
  }
  prepare();
  if (scratch_.capacity() != nfa_->state_count()) scratch_ = SparseStateSet(nfa_->state_count());
  current_ = std::move(word);
  phase_ = Phase::kRunning;
}

LanguageExtent language_extent(const Nfa& nfa) {
  const std::size_t n = nfa.state_count();
  std::vector<std::vector<State>> reverse(n);
  for (State q = 0; q < n; ++q) {
    for (const auto& e : nfa.edges(q)) {
      for (State to : nfa.targets(e)) reverse[to].push_back(q);
    }
  }

  auto sweep = [n](std::span<const State> seeds, auto&& successors) {
    std::vector<unsigned char> seen(n, 0);
    std::vector<State> todo(seeds.begin(), seeds.end());
    for (State q : todo) seen[q] = 1;
    while (!todo.empty()) {
      const State q = todo.back();
      todo.pop_back();
      successors(q, [&](State r) {
        if (!seen[r]) {
          seen[r] = 1;
          todo.push_back(r);
        }
      });
    }
    return seen;
  };
  const auto reachable = sweep(nfa.initial(), [&](State q, auto&& visit) {
    for (const auto& e : nfa.edges(q)) {
      for (State to : nfa.targets(e)) visit(to);
    }
  });
  const auto coreachable = sweep(nfa.final_states(), [&](State q, auto&& visit) {
    for (State from : reverse[q]) visit(from);
  });

  std::vector<unsigned char> useful(n);
  bool any = false;
  for (State q = 0; q < n; ++q) {
    useful[q] = reachable[q] && coreachable[q];
    any = any || useful[q];
  }
  LanguageExtent extent;
  if (!any) return extent;
  extent.empty = false;

  // Kahn's algorithm on the useful subgraph; a leftover state means a cycle.
  // Parallel edges under different symbols count once per symbol, which is
  // harmless for both the cycle test and longest-path lengths.
  std::vector<std::size_t> indegree(n, 0);
  for (State q = 0; q < n; ++q) {
    if (!useful[q]) continue;
    for (const auto& e : nfa.edges(q)) {
      for (State to : nfa.targets(e)) {
        if (useful[to]) ++indegree[to];
      }
    }
  }
  std::deque<State> ready;
  for (State q = 0; q < n; ++q) {
    if (useful[q] && indegree[q] == 0) ready.push_back(q);
  }
  // depth[q] = longest path from a useful initial state to q, or -1.
  std::vector<long long> depth(n, -1);
  for (State q : nfa.initial()) {
    if (useful[q]) depth[q] = 0;
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    const State q = ready.front();
    ready.pop_front();
    ++processed;
    for (const auto& e : nfa.edges(q)) {
      for (State to : nfa.targets(e)) {
        if (!useful[to]) continue;
        if (depth[q] >= 0) depth[to] = std::max(depth[to], depth[q] + 1);
        if (--indegree[to] == 0) ready.push_back(to);
      }
    }
  }
  std::size_t useful_count = 0;
  for (State q = 0; q < n; ++q) useful_count += useful[q];
  if (processed != useful_count) {
    extent.infinite = true;
    return extent;
  }
  for (State q : nfa.final_states()) {
    if (useful[q] && depth[q] >= 0) extent.longest = std::max(extent.longest, static_cast<std::size_t>(depth[q]));
  }
  return extent;
}

RadixCursor::RadixCursor(std::shared_ptr<const Nfa> nfa, RadixBounds bounds)
    : nfa_(std::move(nfa)), bounds_(bounds), stop_length_(bounds.max_length) {
  if (!nfa_) throw std::invalid_argument("RadixCursor: null automaton");
  const LanguageExtent extent = language_extent(*nfa_);
  if (extent.empty) {
    done_ = true;
  } else if (!extent.infinite) {
    stop_length_ = std::min(stop_length_.value_or(extent.longest), extent.longest);
  }
}

std::optional<Word> RadixCursor::next() {
  while (!done_) {
    if (bounds_.limit && emitted_ >= *bounds_.limit) break;
    if (!cursor_) {
      if (stop_length_ && length_ > *stop_length_) break;
      cursor_.emplace(nfa_, length_);
    }
    if (auto w = cursor_->next()) {
      ++emitted_;
      return w;
    }
    cursor_.reset();
    ++length_;
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace xsect
