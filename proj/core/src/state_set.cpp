#include "xsect/state_set.hpp"

#include <cassert>

#include "xsect/instrument.hpp"

namespace xsect {

SparseStateSet::SparseStateSet(std::size_t capacity) : member_(capacity, 0) {
  elements_.reserve(capacity);
  instrument::tick(capacity);
}

bool SparseStateSet::insert(State q) {
  assert(q < member_.size());
  instrument::tick();
  if (member_[q] != 0) return false;
  member_[q] = 1;
  elements_.push_back(q);
  return true;
}

void SparseStateSet::clear() noexcept {
  instrument::tick(elements_.size());
  for (State q : elements_) member_[q] = 0;
  elements_.clear();
}

}  // namespace xsect
