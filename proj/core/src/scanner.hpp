#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace flagcycles::detail {

/// Character cursor with 1-based line/column tracking for the literal grammars.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  char advance();
  /// Returns true if anything was skipped.
  bool skip_space();
  bool consume(char c);
  bool consume(std::string_view s);
  void expect(char c);

  /// [A-Za-z][A-Za-z0-9_]*
  std::string identifier();
  /// Optional sign followed by decimal digits, kept as text.
  std::string integer_text();

  void expect_end();

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected = {}) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace flagcycles::detail
