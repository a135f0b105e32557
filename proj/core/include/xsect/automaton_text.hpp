#pragma once

// Line-oriented automaton format:
//
//   # comment lines allowed anywhere
//   alphabet a b          # symbol order = lexicographic order
//   states 2
//   initial 0             # zero or more states
//   final 1
//   0 a 0                 # transition lines: from symbol to
//
// `#` starts a comment anywhere on a line. Tokens are separated by blanks.
// Each alphabet token is a single Unicode scalar (UTF-8).

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xsect/nfa.hpp"

namespace xsect {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line), detail_(message) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  // Message without the line prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

Nfa parse_automaton(std::string_view text);

// Concatenated glyphs; the empty word is the empty string.
std::string format_word(const Nfa& nfa, std::span<const SymbolId> word);

}  // namespace xsect
