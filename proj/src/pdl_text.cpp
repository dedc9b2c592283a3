// Copyright 2026 The pgames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pgames/pdl_text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <vector>

namespace pgames {

PdlSyntaxError::PdlSyntaxError(int line, int column, const std::string& message)
    : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                  message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class Tok {
  kEnd,
  kNumber,
  kIdent,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kLParen,
  kRParen,
  kComma,
  kColon,
  kLBrace,
  kRBrace,
  kArrow,
  kCompare,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  double number = 0.0;
  CompareOp op = CompareOp::kEqual;
  int line = 1;
  int column = 1;
};

std::string describe_token(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        lex_number(t);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          advance();
        }
        t.kind = Tok::kIdent;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else {
        lex_symbol(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool peek_is(char c, std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() && text_[pos_ + ahead] == c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    const std::size_t start = pos_;
    const auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    };
    digits();
    if (peek_is('.')) {
      advance();
      digits();
    }
    if (peek_is('e') || peek_is('E')) {
      std::size_t ahead = 1;
      if (peek_is('+', 1) || peek_is('-', 1)) ahead = 2;
      if (pos_ + ahead < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + ahead]))) {
        for (std::size_t i = 0; i < ahead; ++i) advance();
        digits();
      }
    }
    // "1e", "2x", "1.5.2": report the whole run as one bad number.
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.')) {
      advance();
    }
    t.kind = Tok::kNumber;
    t.text = std::string(text_.substr(start, pos_ - start));
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, t.number);
    if (ec != std::errc() || ptr != last) {
      throw PdlSyntaxError(t.line, t.column, "malformed number '" + t.text + "'");
    }
  }

  void lex_symbol(Token& t) {
    const char c = text_[pos_];
    const auto single = [&](Tok kind) {
      t.kind = kind;
      t.text = std::string(1, c);
      advance();
    };
    const auto compare = [&](CompareOp op, int width) {
      t.kind = Tok::kCompare;
      t.op = op;
      t.text = std::string(text_.substr(pos_, static_cast<std::size_t>(width)));
      for (int i = 0; i < width; ++i) advance();
    };
    switch (c) {
      case '+': return single(Tok::kPlus);
      case '*': return single(Tok::kStar);
      case '/': return single(Tok::kSlash);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case ',': return single(Tok::kComma);
      case ':': return single(Tok::kColon);
      case '{': return single(Tok::kLBrace);
      case '}': return single(Tok::kRBrace);
      case '-':
        if (peek_is('>', 1)) {
          t.kind = Tok::kArrow;
          t.text = "->";
          advance();
          advance();
          return;
        }
        return single(Tok::kMinus);
      case '<':
        return peek_is('=', 1) ? compare(CompareOp::kLessEqual, 2) : compare(CompareOp::kLess, 1);
      case '>':
        return peek_is('=', 1) ? compare(CompareOp::kGreaterEqual, 2)
                               : compare(CompareOp::kGreater, 1);
      case '=':
        if (peek_is('=', 1)) return compare(CompareOp::kEqual, 2);
        break;
      case '!':
        if (peek_is('=', 1)) return compare(CompareOp::kNotEqual, 2);
        break;
      default:
        break;
    }
    throw PdlSyntaxError(line_, column_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_keyword(std::string_view word) {
  static const std::set<std::string_view> kKeywords = {"params", "if",    "and",  "else",
                                                       "rest",   "abs",   "floor", "ceil"};
  return kKeywords.count(word) > 0;
}

class Parser {
 public:
  // With `declared` null every identifier in an expression is a parameter.
  Parser(std::vector<Token> tokens, const std::set<std::string>* declared)
      : tokens_(std::move(tokens)), declared_(declared) {}

  Pdl pdl() {
    expect_word("params");
    expect(Tok::kColon, "':' after 'params'");
    std::vector<std::string> params;
    std::set<std::string> declared;
    for (;;) {
      const Token& name = expect(Tok::kIdent, "a parameter name");
      if (is_keyword(name.text)) fail(name, "'" + name.text + "' is reserved");
      if (!declared.insert(name.text).second) {
        fail(name, "parameter '" + name.text + "' declared twice");
      }
      params.push_back(name.text);
      if (!accept(Tok::kComma)) break;
    }
    declared_ = &declared;

    std::vector<Rule> rules;
    while (at_word("if")) {
      next();
      std::vector<Comparison> conditions;
      conditions.push_back(condition());
      while (at_word("and")) {
        next();
        conditions.push_back(condition());
      }
      expect(Tok::kArrow, "'->' or 'and'");
      rules.push_back({std::move(conditions), strategy()});
    }
    if (!at_word("else")) fail(peek(), "expected 'if' or 'else', found " + describe_token(peek()));
    next();
    expect(Tok::kArrow, "'->' after 'else'");
    ParamStrategy fallback = strategy();
    if (peek().kind != Tok::kEnd) {
      fail(peek(), "unexpected " + describe_token(peek()) + " after the else line");
    }
    declared_ = nullptr;
    return Pdl(std::move(params), std::move(rules), std::move(fallback));
  }

  Expr lone_expr() {
    Expr e = expr();
    if (peek().kind != Tok::kEnd) fail(peek(), "unexpected " + describe_token(peek()));
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  bool at_word(std::string_view word) const {
    return peek().kind == Tok::kIdent && peek().text == word;
  }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw PdlSyntaxError(at.line, at.column, message);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what + ", found " + describe_token(peek()));
    return next();
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) {
      fail(peek(), "expected '" + std::string(word) + "', found " + describe_token(peek()));
    }
    next();
  }

  Comparison condition() {
    Expr lhs = expr();
    if (peek().kind != Tok::kCompare) {
      fail(peek(), "expected a comparison operator, found " + describe_token(peek()));
    }
    const CompareOp op = next().op;
    Expr rhs = expr();
    return {std::move(lhs), op, std::move(rhs)};
  }

  ParamStrategy strategy() {
    if (peek().kind == Tok::kIdent && !is_keyword(peek().text)) {
      return ParamStrategy::pure(next().text);
    }
    if (!accept(Tok::kLBrace)) {
      fail(peek(), "expected an action or '{', found " + describe_token(peek()));
    }
    std::vector<WeightedAction> entries;
    std::set<std::string> seen;
    bool has_rest = false;
    for (;;) {
      const Token& label = expect(Tok::kIdent, "an action label");
      if (is_keyword(label.text)) fail(label, "'" + label.text + "' is reserved");
      if (!seen.insert(label.text).second) {
        fail(label, "action '" + label.text + "' appears twice in one strategy");
      }
      expect(Tok::kColon, "':' after action label");
      if (at_word("rest")) {
        if (has_rest) fail(peek(), "only one weight may be 'rest'");
        has_rest = true;
        next();
        entries.push_back({label.text, std::nullopt});
      } else {
        entries.push_back({label.text, expr()});
      }
      if (!accept(Tok::kComma)) break;
    }
    expect(Tok::kRBrace, "',' or '}'");
    return ParamStrategy(std::move(entries));
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept(Tok::kPlus)) {
        lhs = lhs + term();
      } else if (accept(Tok::kMinus)) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept(Tok::kStar)) {
        lhs = lhs * unary();
      } else if (accept(Tok::kSlash)) {
        lhs = lhs / unary();
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept(Tok::kMinus)) {
      // Fold "-literal" so rendered negative constants reparse to the same node.
      // Zero renders unsigned, so "-0" stays a negation.
      if (peek().kind == Tok::kNumber && peek().number != 0.0) return Expr::number(-next().number);
      return -unary();
    }
    return primary();
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNumber:
        next();
        return Expr::number(t.number);
      case Tok::kLParen: {
        next();
        Expr inner = expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        return identifier();
      default:
        fail(t, "expected an expression, found " + describe_token(t));
    }
  }

  Expr identifier() {
    const Token& t = next();
    const auto call = [&](Expr (*fn)(Expr)) {
      expect(Tok::kLParen, "'(' after '" + t.text + "'");
      Expr inner = expr();
      expect(Tok::kRParen, "')'");
      return fn(std::move(inner));
    };
    if (t.text == "abs") return call(&abs);
    if (t.text == "floor") return call(&floor);
    if (t.text == "ceil") return call(&ceil);
    if (is_keyword(t.text)) fail(t, "expected an expression, found " + describe_token(t));
    if (declared_ && !declared_->count(t.text)) {
      fail(t, "parameter '" + t.text + "' is not declared");
    }
    return Expr::param(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::set<std::string>* declared_;
};

}  // namespace

Pdl parse_pdl(std::string_view text) {
  Parser parser(Lexer(text).run(), nullptr);
  return parser.pdl();
}

Expr parse_expr(std::string_view text) {
  Parser parser(Lexer(text).run(), nullptr);
  return parser.lone_expr();
}

std::string render_condition(const Comparison& cond) {
  return render(cond.lhs) + " " + to_string(cond.op) + " " + render(cond.rhs);
}

std::string render_strategy(const ParamStrategy& strategy) {
  if (strategy.is_pure()) return strategy.entries().front().action;
  std::string out = "{";
  bool first = true;
  for (const auto& entry : strategy.entries()) {
    if (!first) out += ", ";
    first = false;
    out += entry.action + ": " + (entry.weight ? render(*entry.weight) : "rest");
  }
  return out + "}";
}

std::string render_pdl(const Pdl& pdl) {
  std::string out = "params: ";
  for (std::size_t i = 0; i < pdl.params().size(); ++i) {
    if (i) out += ", ";
    out += pdl.params()[i];
  }
  out += '\n';
  for (const auto& rule : pdl.rules()) {
    out += "  if ";
    for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
      if (i) out += " and ";
      out += render_condition(rule.conditions[i]);
    }
    out += " -> " + render_strategy(rule.strategy) + "\n";
  }
  out += "  else -> " + render_strategy(pdl.fallback()) + "\n";
  return out;
}

}  // namespace pgames
