#include "xsect/automaton_text.hpp"

#include <charconv>
#include <optional>
#include <unordered_map>
#include <vector>

#include "xsect/utf8.hpp"

namespace xsect {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < line.size()) {
    while (i < line.size() && blank(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !blank(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<std::size_t> parse_count(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

class Parser {
 public:
  Nfa run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      const auto tokens = split(line);
      if (!tokens.empty()) handle(line_no, tokens);
      start = end + 1;
    }
    if (!states_) throw ParseError(line_no, "missing 'states' header");
    try {
      return Nfa::build(std::move(alphabet_), *states_, initial_, final_, transitions_);
    } catch (const NfaError& e) {
      throw ParseError(line_no, e.what());
    }
  }

 private:
  void handle(std::size_t line, const std::vector<std::string_view>& tokens) {
    const std::string_view head = tokens.front();
    if (head == "alphabet") {
      if (have_alphabet_) throw ParseError(line, "duplicate 'alphabet' header");
      have_alphabet_ = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const char32_t glyph = single_scalar(line, tokens[i]);
        if (!ids_.emplace(glyph, static_cast<SymbolId>(alphabet_.size())).second) {
          throw ParseError(line, "duplicate symbol '" + std::string(tokens[i]) + "'");
        }
        alphabet_.push_back(glyph);
      }
    } else if (head == "states") {
      if (states_) throw ParseError(line, "duplicate 'states' header");
      if (tokens.size() != 2) throw ParseError(line, "'states' takes exactly one count");
      const auto n = parse_count(tokens[1]);
      if (!n || *n > 0xFFFFFFFFull) throw ParseError(line, "invalid state count '" + std::string(tokens[1]) + "'");
      states_ = *n;
    } else if (head == "initial" || head == "final") {
      auto& target = head == "initial" ? initial_ : final_;
      for (std::size_t i = 1; i < tokens.size(); ++i) target.push_back(state(line, tokens[i]));
    } else if (tokens.size() == 3 && parse_count(head)) {
      if (!have_alphabet_) throw ParseError(line, "missing 'alphabet' header before transitions");
      const State from = state(line, tokens[0]);
      const SymbolId a = symbol(line, tokens[1]);
      const State to = state(line, tokens[2]);
      transitions_.push_back({from, a, to});
    } else {
      throw ParseError(line, "unknown directive '" + std::string(head) + "'");
    }
  }

  char32_t single_scalar(std::size_t line, std::string_view token) const {
    std::vector<char32_t> decoded;
    try {
      decoded = utf8::decode(token);
    } catch (const utf8::DecodeError& e) {
      throw ParseError(line, e.what());
    }
    if (decoded.size() != 1) {
      throw ParseError(line, "symbol '" + std::string(token) + "' is not a single character");
    }
    return decoded.front();
  }

  State state(std::size_t line, std::string_view token) const {
    if (!states_) throw ParseError(line, "missing 'states' header before state references");
    const auto q = parse_count(token);
    if (!q) throw ParseError(line, "invalid state '" + std::string(token) + "'");
    if (*q >= *states_) {
      throw ParseError(line, "state " + std::string(token) + " out of range (automaton has " +
                                 std::to_string(*states_) + " states)");
    }
    return static_cast<State>(*q);
  }

  SymbolId symbol(std::size_t line, std::string_view token) const {
    const char32_t glyph = single_scalar(line, token);
    if (auto it = ids_.find(glyph); it != ids_.end()) return it->second;
    throw ParseError(line, "unknown symbol '" + std::string(token) + "'");
  }

  bool have_alphabet_ = false;
  std::vector<char32_t> alphabet_;
  std::unordered_map<char32_t, SymbolId> ids_;
  std::optional<std::size_t> states_;
  std::vector<State> initial_;
  std::vector<State> final_;
  std::vector<Nfa::Transition> transitions_;
};

}  // namespace

Nfa parse_automaton(std::string_view text) { return Parser{}.run(text); }

std::string format_word(const Nfa& nfa, std::span<const SymbolId> word) {
  std::string out;
  out.reserve(word.size());
  for (SymbolId a : word) utf8::append(out, nfa.alphabet()[a]);
  return out;
}

}  // namespace xsect
