#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xsect/types.hpp"

namespace xsect {

// Subset of {0..capacity-1} backed by a membership array and an element list.
// Creation is O(capacity); insert is O(1); iteration and clear are O(size()).
// Iteration follows insertion order, so front() is the first state inserted.
class SparseStateSet {
 public:
  SparseStateSet() = default;
  explicit SparseStateSet(std::size_t capacity);

  // Returns false when q was already present.
  bool insert(State q);
  void clear() noexcept;

  [[nodiscard]] bool contains(State q) const noexcept { return q < member_.size() && member_[q] != 0; }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::size_t capacity() const noexcept { return member_.size(); }
  [[nodiscard]] State front() const { return elements_.front(); }

  [[nodiscard]] std::span<const State> elements() const noexcept { return elements_; }
  [[nodiscard]] auto begin() const noexcept { return elements_.begin(); }
  [[nodiscard]] auto end() const noexcept { return elements_.end(); }

  // Membership array, exposed for consistency checks.
  [[nodiscard]] std::span<const unsigned char> membership() const noexcept { return member_; }

 private:
  std::vector<unsigned char> member_;
  std::vector<State> elements_;
};

}  // namespace xsect
