#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace tfsdisc::detail {

enum class Tok {
  kIdent,
  kString,
  kTag,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kColon,
  kAssign,
  kDot,
  kComma,
  kPipe,
  kSlash,
  kEquals,
  kStar,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

const char* describe(Tok kind);

// Shared tokenizer for the hierarchy, AVM, atom and lexicon languages.
// `#` followed by a digit is a re-entrancy tag; any other `#` starts a
// comment running to the end of the line.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token next();
  bool at(Tok kind) const { return current_.kind == kind; }

  // Consumes a token of the given kind or throws ParseError.
  Token expect(Tok kind, std::string_view what);

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] static void fail_at(const Token& tok, const std::string& message);

 private:
  void advance();
  void skip_space();
  char get();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

}  // namespace tfsdisc::detail
