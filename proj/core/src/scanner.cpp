#include "scanner.hpp"

#include <cctype>
#include <sstream>

#include "flagcycles/errors.hpp"

namespace flagcycles {

namespace {

std::string describe(const std::string& message, std::size_t line, std::size_t column,
                     const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << line << ':' << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column,
                         std::vector<std::string> expected)
    : Error(describe(message, line, column, expected)),
      message_(std::move(message)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace detail {

char Scanner::advance() {
  const char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

bool Scanner::skip_space() {
  bool skipped = false;
  while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
    advance();
    skipped = true;
  }
  return skipped;
}

bool Scanner::consume(char c) {
  if (at_end() || peek() != c) return false;
  advance();
  return true;
}

bool Scanner::consume(std::string_view s) {
  if (rest().substr(0, s.size()) != s) return false;
  for (std::size_t i = 0; i < s.size(); ++i) advance();
  return true;
}

void Scanner::expect(char c) {
  if (!consume(c)) {
    fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'",
         {std::string("'") + c + "'"});
  }
}

std::string Scanner::identifier() {
  if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
    fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'",
         {"identifier"});
  }
  std::string out;
  while (!at_end()) {
    const auto c = static_cast<unsigned char>(peek());
    if (!std::isalnum(c) && c != '_') break;
    out.push_back(advance());
  }
  return out;
}

std::string Scanner::integer_text() {
  std::string out;
  if (peek() == '-' || peek() == '+') out.push_back(advance());
  if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
    fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'",
         {"integer"});
  }
  while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(advance());
  return out;
}

void Scanner::expect_end() {
  skip_space();
  if (!at_end()) fail(std::string("unexpected '") + peek() + "'", {"end of input"});
}

void Scanner::fail(const std::string& what, std::vector<std::string> expected) const {
  throw SyntaxError(what, line_, column_, std::move(expected));
}

}  // namespace detail
}  // namespace flagcycles
