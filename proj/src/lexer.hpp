#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "fpg/errors.hpp"

namespace fpg::detail {

enum class Tok { Name, Int, Star, Caret, LParen, RParen, LBracket, RBracket,
                 Comma, Less, Greater, Pipe, Equals, End };

struct Token {
  Tok kind;
  std::string text;   // for Name
  long value = 0;     // for Int
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token next() {
    Token t = current_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, current_.line, current_.column);
  }
  Token expect(Tok kind, const std::string& what) {
    if (current_.kind != kind) fail("expected " + what);
    return next();
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '*': current_.kind = Tok::Star; bump(); return;
      case '^': current_.kind = Tok::Caret; bump(); return;
      case '(': current_.kind = Tok::LParen; bump(); return;
      case ')': current_.kind = Tok::RParen; bump(); return;
      case '[': current_.kind = Tok::LBracket; bump(); return;
      case ']': current_.kind = Tok::RBracket; bump(); return;
      case ',': current_.kind = Tok::Comma; bump(); return;
      case '<': current_.kind = Tok::Less; bump(); return;
      case '>': current_.kind = Tok::Greater; bump(); return;
      case '|': current_.kind = Tok::Pipe; bump(); return;
      case '=': current_.kind = Tok::Equals; bump(); return;
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c == '-') bump();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("stray '-'", current_.line, current_.column);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
      current_.kind = Tok::Int;
      current_.value = std::stol(std::string(text_.substr(start, pos_ - start)));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        bump();
      current_.kind = Tok::Name;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'",
                     current_.line, current_.column);
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

}  // namespace fpg::detail
