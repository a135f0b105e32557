#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "xsect/automaton_text.hpp"
#include "xsect/delay_report.hpp"
#include "xsect/enumerate.hpp"
#include "xsect/instrument.hpp"
#include "xsect/regex.hpp"
#include "xsect/random_nfa.hpp"

namespace xsect::cli {

namespace {

// Reported on stderr with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string automaton_path;
  std::string regex;
  bool have_regex = false;
  std::optional<std::size_t> random_states;
  std::size_t random_symbols = 2;
  std::size_t random_transitions = 0;
  std::size_t random_initial = 1;
  std::size_t random_finals = 1;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open automaton file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::shared_ptr<const Nfa> load(const Source& src) {
  try {
    if (src.random_states) {
      RandomNfaSpec spec{*src.random_states, src.random_symbols, src.random_transitions, src.random_initial,
                         src.random_finals};
      return std::make_shared<const Nfa>(random_nfa(spec, src.seed));
    }
    if (src.have_regex) return std::make_shared<const Nfa>(compile_regex(src.regex));
    if (!src.automaton_path.empty()) {
      const std::string text = read_file(src.automaton_path);
      try {
        return std::make_shared<const Nfa>(parse_automaton(text));
      } catch (const ParseError& e) {
        throw InputError(src.automaton_path + ":" + std::to_string(e.line()) + ": " + e.detail());
      }
    }
  } catch (const RegexError& e) {
    throw InputError(e.what());
  } catch (const NfaError& e) {
    throw InputError(e.what());
  }
  throw InputError("one of --automaton or --regex is required");
}

void add_source_options(CLI::App& cmd, Source& src) {
  auto* automaton = cmd.add_option("--automaton", src.automaton_path, "Automaton file");
  auto* regex = cmd.add_option_function<std::string>(
      "--regex",
      [&src](const std::string& p) {
        src.regex = p;
        src.have_regex = true;
      },
      "Regular expression (literals, |, *, +, ?, parentheses)");
  automaton->excludes(regex);
}

// Writes one word per line, returns the number written.
template <typename Cursor>
std::uint64_t stream_words(Cursor& cursor, const Nfa& nfa, std::ostream& out, std::optional<std::uint64_t> limit) {
  std::uint64_t written = 0;
  std::string line;
  while (!limit || written < *limit) {
    const auto w = cursor.next();
    if (!w) break;
    line = format_word(nfa, *w);
    line.push_back('\n');
    out << line;
    ++written;
  }
  return written;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the words of a regular language in lexicographic or radix order", "xsect"};
  app.require_subcommand(1);

  Source src;
  std::size_t length = 0;
  std::optional<std::size_t> max_length;
  std::optional<std::uint64_t> limit;
  bool count_ops = false;

  auto* enum_cmd = app.add_subcommand("enum", "Words of one length in lexicographic order");
  add_source_options(*enum_cmd, src);
  enum_cmd->add_option("--length", length, "Word length")->required();
  enum_cmd->add_option("--limit", limit, "Stop after N words");
  enum_cmd->add_flag("--count-ops", count_ops, "Report the operation count on stderr");

  auto* radix_cmd = app.add_subcommand("radix", "Words by increasing length, lexicographic within a length");
  add_source_options(*radix_cmd, src);
  radix_cmd->add_option("--max-length", max_length, "Longest length to enumerate");
  radix_cmd->add_option("--limit", limit, "Stop after N words");
  radix_cmd->add_flag("--count-ops", count_ops, "Report the operation count on stderr");

  auto* bench_cmd = app.add_subcommand("bench", "Per-output operation counts and timings as CSV");
  add_source_options(*bench_cmd, src);
  bench_cmd->add_option("--length", length, "Word length")->required();
  bench_cmd->add_option("--limit", limit, "Stop after N words");
  bench_cmd->add_option("--seed", src.seed, "Seed for --random-states");
  bench_cmd->add_option("--random-states", src.random_states, "Generate a random automaton with N states");
  bench_cmd->add_option("--random-symbols", src.random_symbols, "Alphabet size of the random automaton");
  bench_cmd->add_option("--random-transitions", src.random_transitions, "Distinct transitions of the random automaton");
  bench_cmd->add_option("--random-initial", src.random_initial, "Initial states of the random automaton");
  bench_cmd->add_option("--random-finals", src.random_finals, "Final states of the random automaton");
  bench_cmd->add_flag("--count-ops", count_ops, "Accepted for symmetry; bench always counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*bench_cmd) {
      if (src.random_states && (src.have_regex || !src.automaton_path.empty())) {
        throw InputError("--random-states cannot be combined with --automaton or --regex");
      }
      instrument::ScopedCounting counting;
      instrument::reset();
      const auto start = std::chrono::steady_clock::now();
      auto nfa = load(src);
      const auto build_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start);
      const std::uint64_t build_ops = instrument::read();
      DelayReport report = measure_delays(nfa, length, limit);
      report.build_ops = build_ops;
      report.build_nanos = static_cast<std::uint64_t>(build_nanos.count());
      write_delay_csv(out, report);
      return kExitOk;
    }

    if (*radix_cmd && !max_length && !limit) {
      throw InputError("radix needs --max-length and/or --limit");
    }
    const auto nfa = load(src);
    instrument::ScopedCounting counting(count_ops);
    instrument::reset();
    std::uint64_t written = 0;
    if (*enum_cmd) {
      CrossSectionCursor cursor(nfa, length);
      written = stream_words(cursor, *nfa, out, limit);
    } else {
      RadixCursor cursor(nfa, {max_length, limit});
      written = stream_words(cursor, *nfa, out, std::nullopt);
    }
    if (count_ops) err << "# words=" << written << ", ops=" << instrument::read() << '\n';
    return kExitOk;
  } catch (const InputError& e) {
    err << "xsect: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace xsect::cli
