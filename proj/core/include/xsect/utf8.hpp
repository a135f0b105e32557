#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xsect::utf8 {

class DecodeError : public std::invalid_argument {
 public:
  DecodeError(std::string message, std::size_t offset)
      : std::invalid_argument(std::move(message)), offset_(offset) {}
  // Byte offset of the malformed sequence.
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Rejects overlong forms, surrogates and values above U+10FFFF.
std::vector<char32_t> decode(std::string_view bytes);

void append(std::string& out, char32_t scalar);
std::string encode(char32_t scalar);

}  // namespace xsect::utf8
