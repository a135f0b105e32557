#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "xsect/nfa.hpp"

namespace xsect {

// One cell of the MinArrow table: bottom (no word of this length is accepted
// from the state), epsilon (level 0, final state) or the first transition
// (symbol, target) of a computation spelling the least accepted word.
//
// Plain pair of 32-bit fields with sentinel symbols so that a table is a
// padding-free byte array.
struct MinArrowEntry {
  static constexpr SymbolId kBottom = std::numeric_limits<SymbolId>::max();
  static constexpr SymbolId kEpsilon = std::numeric_limits<SymbolId>::max() - 1;

  SymbolId symbol = kBottom;
  State target = 0;

  static constexpr MinArrowEntry bottom() noexcept { return {kBottom, 0}; }
  static constexpr MinArrowEntry epsilon() noexcept { return {kEpsilon, 0}; }
  static constexpr MinArrowEntry arrow(SymbolId a, State p) noexcept { return {a, p}; }

  [[nodiscard]] constexpr bool is_bottom() const noexcept { return symbol == kBottom; }
  [[nodiscard]] constexpr bool is_epsilon() const noexcept { return symbol == kEpsilon; }
  [[nodiscard]] constexpr bool is_arrow() const noexcept { return symbol < kEpsilon; }

  friend constexpr bool operator==(const MinArrowEntry&, const MinArrowEntry&) = default;
};

// Dense (ℓ+1) x |Q| table, fully initialised with bottom.
class MinArrowTable {
 public:
  MinArrowTable() = default;
  MinArrowTable(std::size_t length, std::size_t state_count);

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return states_; }

  [[nodiscard]] const MinArrowEntry& at(std::size_t k, State q) const { return cells_[k * states_ + q]; }
  MinArrowEntry& at(std::size_t k, State q) { return cells_[k * states_ + q]; }

  [[nodiscard]] std::span<const std::byte> bytes() const noexcept { return std::as_bytes(std::span(cells_)); }

  friend bool operator==(const MinArrowTable&, const MinArrowTable&) = default;

 private:
  std::size_t length_ = 0;
  std::size_t states_ = 0;
  std::vector<MinArrowEntry> cells_;
};

// Dense (ℓ+1) x |Q| x |Q| boolean table, fully initialised with false.
// at(k, q, q') encodes the preorder q ≤ₖ q'.
class CompTable {
 public:
  CompTable() = default;
  CompTable(std::size_t length, std::size_t state_count);

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return states_; }

  [[nodiscard]] bool at(std::size_t k, State q, State q2) const { return cells_[(k * states_ + q) * states_ + q2] != 0; }
  void set(std::size_t k, State q, State q2, bool v) { cells_[(k * states_ + q) * states_ + q2] = v ? 1 : 0; }

  [[nodiscard]] std::span<const std::byte> bytes() const noexcept { return std::as_bytes(std::span(cells_)); }

  friend bool operator==(const CompTable&, const CompTable&) = default;

 private:
  std::size_t length_ = 0;
  std::size_t states_ = 0;
  std::vector<unsigned char> cells_;
};

struct Tables {
  MinArrowTable min_arrow;
  CompTable comp;

  [[nodiscard]] std::size_t length() const noexcept { return min_arrow.length(); }
  friend bool operator==(const Tables&, const Tables&) = default;
};

// Builds MinArrow and Comp for every length 0..length.
// O(ℓ·|Δ| + ℓ·|Q|²) time, O(ℓ·|Q|²) space.
Tables preprocess(const Nfa& nfa, std::size_t length);

// Follows the MinArrow chain from (k, q) and returns the word it spells.
// Requires min_arrow.at(k, q) to be non-bottom.
Word spell_min_arrow_chain(const MinArrowTable& min_arrow, std::size_t k, State q);

}  // namespace xsect
