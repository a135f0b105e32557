#include "xsect/delay_report.hpp"

#include <algorithm>
#include <chrono>

#include "xsect/enumerate.hpp"
#include "xsect/instrument.hpp"
#include "xsect/preprocess.hpp"

namespace xsect {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

}  // namespace

std::uint64_t DelayReport::max_delay_ops() const {
  std::uint64_t worst = tail_ops;
  for (const DelayRecord& r : records) worst = std::max(worst, r.op_count);
  return worst;
}

DelayReport measure_delays(std::shared_ptr<const Nfa> nfa, std::size_t length, std::optional<std::uint64_t> limit) {
  DelayReport report;
  report.length = length;
  report.states = nfa->state_count();
  report.symbols = nfa->symbol_count();
  report.transitions = nfa->transition_count();

  instrument::ScopedCounting counting;
  instrument::reset();
  auto start = Clock::now();
  auto tables = std::make_shared<const Tables>(preprocess(*nfa, length));
  report.preproc_nanos = nanos_since(start);
  report.preproc_ops = instrument::read();

  CrossSectionCursor cursor(std::move(nfa), std::move(tables));
  for (std::uint64_t index = 0; !limit || index < *limit; ++index) {
    instrument::reset();
    start = Clock::now();
    const auto word = cursor.next();
    const std::uint64_t nanos = nanos_since(start);
    const std::uint64_t ops = instrument::read();
    if (!word) {
      report.tail_ops = ops;
      report.tail_nanos = nanos;
      break;
    }
    report.records.push_back({index, word->size(), ops, nanos});
  }
  return report;
}

void write_delay_csv(std::ostream& out, const DelayReport& r) {
  out << "# l=" << r.length << ", Q=" << r.states << ", sigma=" << r.symbols << ", delta=" << r.transitions
      << ", preproc_ops=" << (r.build_ops + r.preproc_ops) << ", preproc_nanos=" << (r.build_nanos + r.preproc_nanos)
      << '\n';
  out << "index,word_len,op_count,wall_nanos\n";
  for (const DelayRecord& rec : r.records) {
    out << rec.index << ',' << rec.word_length << ',' << rec.op_count << ',' << rec.wall_nanos << '\n';
  }
}

}  // namespace xsect
