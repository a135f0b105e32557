#pragma once

// Small regular-expression frontend: literals, concatenation, `|`, `*`, `+`,
// `?` and parentheses; `\` escapes the next character. An empty alternative
// denotes the empty word. The alphabet is the set of literals in code-point
// order. The result has no epsilon transitions.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xsect/nfa.hpp"

namespace xsect {

class RegexError : public std::invalid_argument {
 public:
  RegexError(std::size_t position, const std::string& message)
      : std::invalid_argument("regex error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  // Character (code point) index into the pattern.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

Nfa compile_regex(std::string_view pattern);

}  // namespace xsect
