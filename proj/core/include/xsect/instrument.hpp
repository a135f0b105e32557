#pragma once

// Process-global operation counter.
//
// The core algorithms report elementary work through tick(): transition-pair
// inspections, state-set insertions, table cell reads/writes and Comp
// comparisons each add one. Counting is off by default; when off, tick() is a
// single relaxed load. Counting never changes what the algorithms compute.

#include <atomic>
#include <cstdint>

namespace xsect::instrument {

namespace detail {
inline std::atomic<bool> enabled{false};
inline std::atomic<std::uint64_t> count{0};
}  // namespace detail

inline void tick(std::uint64_t n = 1) noexcept {
  if (detail::enabled.load(std::memory_order_relaxed)) {
    detail::count.fetch_add(n, std::memory_order_relaxed);
  }
}

inline void enable(bool on) noexcept { detail::enabled.store(on, std::memory_order_relaxed); }
inline bool enabled() noexcept { return detail::enabled.load(std::memory_order_relaxed); }
inline std::uint64_t read() noexcept { return detail::count.load(std::memory_order_relaxed); }
inline void reset() noexcept { detail::count.store(0, std::memory_order_relaxed); }

// Enables counting for the lifetime of the scope and restores the previous
// setting afterwards. The counter itself is not reset.
class ScopedCounting {
 public:
  explicit ScopedCounting(bool on = true) noexcept : previous_(enabled()) { enable(on); }
  ~ScopedCounting() { enable(previous_); }
  ScopedCounting(const ScopedCounting&) = delete;
  ScopedCounting& operator=(const ScopedCounting&) = delete;

 private:
  bool previous_;
};

}  // namespace xsect::instrument
