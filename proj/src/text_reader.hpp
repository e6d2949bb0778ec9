#pragma once

// Line/column aware tokenizer shared by the text parsers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aztec/errors.hpp"

namespace aztec::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class TextReader {
 public:
  explicit TextReader(std::string_view text) : text_(text) {}

  // Next line that is not blank; nullopt at end of input.
  std::optional<std::string_view> next_line();

  std::size_t line_number() const { return line_; }

  static std::vector<Token> split(std::string_view line);

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_, column, message);
  }

  long long parse_integer(const Token& token) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

}  // namespace aztec::detail
