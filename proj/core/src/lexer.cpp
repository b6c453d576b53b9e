#include "lexer.hpp"

#include <cctype>

#include "tfsdisc/error.hpp"

namespace tfsdisc::detail {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

}  // namespace

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kString: return "string";
    case Tok::kTag: return "tag";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kColon: return "':'";
    case Tok::kAssign: return "':='";
    case Tok::kDot: return "'.'";
    case Tok::kComma: return "','";
    case Tok::kPipe: return "'|'";
    case Tok::kSlash: return "'/'";
    case Tok::kEquals: return "'='";
    case Tok::kStar: return "'*'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

char Lexer::get() {
  const char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

void Lexer::skip_space() {
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c))) {
      get();
    } else if (c == '#' &&
               !(pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      while (pos_ < text_.size() && text_[pos_] != '\n') get();
    } else {
      break;
    }
  }
}

void Lexer::advance() {
  skip_space();
  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= text_.size()) {
    current_.kind = Tok::kEnd;
    return;
  }
  const char c = get();
  switch (c) {
    case '[': current_.kind = Tok::kLBracket; return;
    case ']': current_.kind = Tok::kRBracket; return;
    case '(': current_.kind = Tok::kLParen; return;
    case ')': current_.kind = Tok::kRParen; return;
    case '.': current_.kind = Tok::kDot; return;
    case ',': current_.kind = Tok::kComma; return;
    case '|': current_.kind = Tok::kPipe; return;
    case '/': current_.kind = Tok::kSlash; return;
    case '=': current_.kind = Tok::kEquals; return;
    case '*': current_.kind = Tok::kStar; return;
    case ':':
      if (pos_ < text_.size() && text_[pos_] == '=') {
        get();
        current_.kind = Tok::kAssign;
      } else {
        current_.kind = Tok::kColon;
      }
      return;
    case '#':
      current_.kind = Tok::kTag;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text.push_back(get());
      }
      return;
    case '"':
      current_.kind = Tok::kString;
      while (true) {
        if (pos_ >= text_.size()) {
          throw ParseError("unterminated string", current_.line, current_.column);
        }
        const char s = get();
        if (s == '"') break;
        if (s == '\\' && pos_ < text_.size()) {
          current_.text.push_back(get());
        } else {
          current_.text.push_back(s);
        }
      }
      return;
    default:
      break;
  }
  if (ident_char(c)) {
    current_.kind = Tok::kIdent;
    current_.text.push_back(c);
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      current_.text.push_back(get());
    }
    return;
  }
  throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                   current_.column);
}

Token Lexer::next() {
  Token tok = current_;
  advance();
  return tok;
}

Token Lexer::expect(Tok kind, std::string_view what) {
  if (current_.kind != kind) {
    std::string msg = "expected ";
    msg += what;
    msg += ", found ";
    msg += current_.kind == Tok::kIdent ? "'" + current_.text + "'"
                                        : std::string(describe(current_.kind));
    fail(msg);
  }
  return next();
}

void Lexer::fail(const std::string& message) const { fail_at(current_, message); }

void Lexer::fail_at(const Token& tok, const std::string& message) {
  throw ParseError(message, tok.line, tok.column);
}

}  // namespace tfsdisc::detail
