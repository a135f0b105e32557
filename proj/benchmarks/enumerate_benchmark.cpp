#include <benchmark/benchmark.h>

#include <memory>

#include "xsect/enumerate.hpp"
#include "xsect/nfa.hpp"
#include "xsect/preprocess.hpp"
#include "xsect/random_nfa.hpp"

namespace {

using namespace xsect;

std::shared_ptr<const Nfa> family_member(std::size_t transitions) {
  return std::make_shared<const Nfa>(random_nfa({20, 4, transitions, 1, 5}, 42 + transitions));
}

// args: length, |Δ|
void BM_Preprocess(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  const auto nfa = family_member(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    Tables t = preprocess(*nfa, length);
    benchmark::DoNotOptimize(t);
  }
  state.counters["delta"] = static_cast<double>(nfa->transition_count());
}
BENCHMARK(BM_Preprocess)->ArgsProduct({{4, 8, 16}, {50, 100, 200, 400}});

// Average delay: time per produced word, restarting when exhausted.
void BM_NextWord(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  const auto nfa = family_member(static_cast<std::size_t>(state.range(1)));
  const auto tables = std::make_shared<const Tables>(preprocess(*nfa, length));
  auto cursor = std::make_unique<CrossSectionCursor>(nfa, tables);
  std::int64_t words = 0;
  for (auto _ : state) {
    auto w = cursor->next();
    if (!w) {
      cursor = std::make_unique<CrossSectionCursor>(nfa, tables);
      w = cursor->next();
      if (!w) {
        state.SkipWithError("empty cross-section");
        break;
      }
    }
    benchmark::DoNotOptimize(w);
    ++words;
  }
  state.SetItemsProcessed(words);
}
BENCHMARK(BM_NextWord)->ArgsProduct({{4, 8, 16}, {50, 100, 200, 400}});

void BM_BuildNfa(benchmark::State& state) {
  const auto transitions = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Nfa nfa = random_nfa({20, 4, transitions, 1, 5}, 7);
    benchmark::DoNotOptimize(nfa);
  }
}
BENCHMARK(BM_BuildNfa)->Arg(50)->Arg(400)->Arg(1600);

}  // namespace

BENCHMARK_MAIN();
