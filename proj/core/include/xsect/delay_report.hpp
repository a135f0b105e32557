#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "xsect/nfa.hpp"

namespace xsect {

struct DelayRecord {
  std::uint64_t index;
  std::size_t word_length;
  std::uint64_t op_count;  // operations since the previous output (or since preprocessing)
  std::uint64_t wall_nanos;
};

struct DelayReport {
  std::size_t length = 0;
  std::size_t states = 0;
  std::size_t symbols = 0;
  std::size_t transitions = 0;
  // Automaton index construction, when the caller measured it.
  std::uint64_t build_ops = 0;
  std::uint64_t build_nanos = 0;
  std::uint64_t preproc_ops = 0;
  std::uint64_t preproc_nanos = 0;
  std::vector<DelayRecord> records;
  // Work of the final call that reported exhaustion; zero if stopped by a limit.
  std::uint64_t tail_ops = 0;
  std::uint64_t tail_nanos = 0;

  [[nodiscard]] std::uint64_t max_delay_ops() const;
};

// Runs preprocessing and the cross-section enumeration with the operation
// counter enabled, recording the work done before each output.
DelayReport measure_delays(std::shared_ptr<const Nfa> nfa, std::size_t length,
                           std::optional<std::uint64_t> limit = std::nullopt);

// `# l=…, Q=…, sigma=…, delta=…, preproc_ops=…, preproc_nanos=…` followed by
// `index,word_len,op_count,wall_nanos` rows. preproc_* include build_*.
void write_delay_csv(std::ostream& out, const DelayReport& report);

}  // namespace xsect
