#include "oodc/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace oodc {

namespace {

constexpr std::array<std::string_view, 30> kSymbols = {
    "<=", ">=", "==", "!=", "&&", "||", "<<", ">>",
    "+", "-", "*", "/", "%", "&", "|", "^", "~", "!", "<", ">", "=",
    "(", ")", "{", "}", "[", "]", ";", ",", ".",
};

constexpr std::array<std::string_view, 24> kKeywords = {
    "class", "interface", "extends", "implements", "public", "static", "native",
    "return", "if", "else", "while", "new", "this", "null", "true", "false",
    "void", "int", "long", "double", "boolean", "char", "super", "for",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_part(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view src, std::string_view file) : src_(src), file_(file) {}

  Result<std::vector<Token>> run() {
    std::vector<Token> tokens;
    while (true) {
      std::size_t trivia_start = pos_;
      if (!skip_trivia()) return Result<std::vector<Token>>::failure(std::move(diags_));
      std::string trivia(src_.substr(trivia_start, pos_ - trivia_start));
      if (pos_ >= src_.size()) {
        Token eof{TokenKind::Eof, "", span_at(pos_, 0), std::move(trivia)};
        tokens.push_back(std::move(eof));
        break;
      }
      auto tok = next_token();
      if (!tok) return Result<std::vector<Token>>::failure(std::move(diags_));
      tok->leading_trivia = std::move(trivia);
      tokens.push_back(std::move(*tok));
    }
    return Result<std::vector<Token>>::success(std::move(tokens));
  }

 private:
  Span span_at(std::size_t offset, std::size_t length) const {
    return Span{std::string(file_), line_, static_cast<int>(offset - line_start_) + 1,
                static_cast<int>(offset), static_cast<int>(length)};
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  bool skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (src_.substr(pos_, 2) == "/*") {
        Span start = span_at(pos_, 2);
        advance();
        advance();
        while (pos_ < src_.size() && src_.substr(pos_, 2) != "*/") advance();
        if (pos_ >= src_.size()) {
          diags_.push_back(make_error("E004", start, "unterminated block comment"));
          return false;
        }
        advance();
        advance();
      } else {
        break;
      }
    }
    return true;
  }

  std::optional<Token> next_token() {
    const std::size_t start = pos_;
    const int start_line = line_;
    const std::size_t start_line_begin = line_start_;
    auto make = [&](TokenKind kind) {
      Span s{std::string(file_), start_line, static_cast<int>(start - start_line_begin) + 1,
             static_cast<int>(start), static_cast<int>(pos_ - start)};
      return Token{kind, std::string(src_.substr(start, pos_ - start)), s, {}};
    };

    char c = src_[pos_];
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(src_[pos_])) advance();
      auto word = src_.substr(start, pos_ - start);
      return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier);
    }
    if (digit(c)) return number(make);
    if (c == '"') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n') advance();
        advance();
      }
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        diags_.push_back(make_error("E002", span_at(start, 1), "unterminated string literal"));
        return std::nullopt;
      }
      advance();
      return make(TokenKind::StringLiteral);
    }
    for (auto sym : kSymbols) {
      if (src_.substr(pos_, sym.size()) == sym) {
        for (std::size_t i = 0; i < sym.size(); ++i) advance();
        return make(TokenKind::Symbol);
      }
    }
    // A non-ASCII lead byte is reported as one character.
    std::size_t len = 1;
    auto u = static_cast<unsigned char>(c);
    if (u >= 0xF0) len = 4;
    else if (u >= 0xE0) len = 3;
    else if (u >= 0xC0) len = 2;
    len = std::min(len, src_.size() - pos_);
    std::string shown(src_.substr(pos_, len));
    diags_.push_back(make_error("E001", span_at(pos_, len), "unrecognized character '" + shown + "'"));
    return std::nullopt;
  }

  template <typename Make>
  std::optional<Token> number(Make& make) {
    while (pos_ < src_.size() && digit(src_[pos_])) advance();
    bool is_double = false;
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' && digit(src_[pos_ + 1])) {
      is_double = true;
      advance();
      while (pos_ < src_.size() && digit(src_[pos_])) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && digit(src_[look])) {
        is_double = true;
        while (pos_ < look) advance();
        while (pos_ < src_.size() && digit(src_[pos_])) advance();
      }
    }
    if (!is_double && pos_ < src_.size() && (src_[pos_] == 'L' || src_[pos_] == 'l')) {
      advance();
      return make(TokenKind::LongLiteral);
    }
    return make(is_double ? TokenKind::DoubleLiteral : TokenKind::IntLiteral);
  }

  std::string_view src_;
  std::string_view file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::span<const std::string_view> symbol_table() { return kSymbols; }

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::LongLiteral: return "long literal";
    case TokenKind::DoubleLiteral: return "double literal";
    case TokenKind::StringLiteral: return "string literal";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::Eof: return "end of file";
  }
  return "token";
}

Result<std::vector<Token>> tokenize(std::string_view source, std::string_view file_id) {
  return Lexer(source, file_id).run();
}

}  // namespace oodc
