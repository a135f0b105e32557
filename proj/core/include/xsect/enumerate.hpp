#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "xsect/nfa.hpp"
#include "xsect/preprocess.hpp"
#include "xsect/state_set.hpp"

namespace xsect {

// Subset run of a word: level i holds the states reachable from I after
// reading the first i symbols. Level 0 is the bottom of the stack.
class RunStack {
 public:
  RunStack() = default;

  void push(SparseStateSet s) { levels_.push_back(std::move(s)); }
  SparseStateSet pop();

  [[nodiscard]] std::size_t size() const noexcept { return levels_.size(); }
  [[nodiscard]] bool empty() const noexcept { return levels_.empty(); }
  [[nodiscard]] const SparseStateSet& at(std::size_t level) const { return levels_.at(level); }
  [[nodiscard]] const SparseStateSet& top() const { return levels_.back(); }

 private:
  std::vector<SparseStateSet> levels_;
};

// Least word of length k accepted from some state of `from`, or nullopt.
// Costs O(|from|) when there is none and O(k + |from|) otherwise.
std::optional<Word> min_word(std::size_t k, const SparseStateSet& from, const Tables& tables);

RunStack build_stack(std::span<const SymbolId> word, const Nfa& nfa);

// Lexicographic successor of `word` among the accepted words of the same
// length, or nullopt when `word` is the largest. `stack` must be
// build_stack(word) and is consumed. `scratch` must be empty on entry and is
// empty again on return.
std::optional<Word> next_word(std::span<const SymbolId> word, const Nfa& nfa, RunStack stack, const Tables& tables,
                              SparseStateSet& scratch);

// Pull-based enumeration of the words of one length, in lexicographic order.
//
// Between calls the only enumeration state is the last output word; the
// tables are never written after preprocessing. Exhaustion is sticky.
class CrossSectionCursor {
 public:
  // Preprocessing runs lazily on the first next() (or on prepare()).
  CrossSectionCursor(std::shared_ptr<const Nfa> nfa, std::size_t length);
  // Reuses tables computed for this automaton.
  CrossSectionCursor(std::shared_ptr<const Nfa> nfa, std::shared_ptr<const Tables> tables);

  void prepare();
  std::optional<Word> next();

  // Positions the cursor as if `word` had just been output, so the next call
  // returns its successor. `word` must be an accepted word of length().
  void resume_after(Word word);

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] bool exhausted() const noexcept { return phase_ == Phase::kExhausted; }
  [[nodiscard]] const std::optional<Word>& current() const noexcept { return current_; }
  [[nodiscard]] const std::shared_ptr<const Tables>& tables() const noexcept { return tables_; }
  [[nodiscard]] const SparseStateSet& scratch() const noexcept { return scratch_; }

 private:
  enum class Phase { kStart, kRunning, kExhausted };

  std::shared_ptr<const Nfa> nfa_;
  std::shared_ptr<const Tables> tables_;
  std::size_t length_;
  Phase phase_ = Phase::kStart;
  std::optional<Word> current_;
  SparseStateSet scratch_;
};

struct LanguageExtent {
  bool empty = true;
  bool infinite = false;
  // Length of the longest accepted word when the language is finite and non-empty.
  std::size_t longest = 0;
};

// Inspects the trimmed transition graph: the language is infinite iff a cycle
// runs through a state that is both reachable and co-reachable.
LanguageExtent language_extent(const Nfa& nfa);

struct RadixBounds {
  std::optional<std::size_t> max_length;
  std::optional<std::uint64_t> limit;
};

// Words of L(nfa) by increasing length, lexicographically within a length.
// Each length gets its own preprocessing. With no bounds on an infinite
// language the cursor never exhausts; finite languages stop after their
// longest word.
class RadixCursor {
 public:
  RadixCursor(std::shared_ptr<const Nfa> nfa, RadixBounds bounds);

  std::optional<Word> next();

  [[nodiscard]] std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  std::shared_ptr<const Nfa> nfa_;
  RadixBounds bounds_;
  std::optional<std::size_t> stop_length_;
  std::size_t length_ = 0;
  std::optional<CrossSectionCursor> cursor_;
  std::uint64_t emitted_ = 0;
  bool done_ = false;
};

}  // namespace xsect
