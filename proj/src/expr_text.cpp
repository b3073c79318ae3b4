/*
   Copyright 2026 The veronese-cas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "veronese/expr_text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace veronese {

namespace {

std::string diagnostic_text(const ParseDiagnostic& d) {
  std::string out = "at offset " + std::to_string(d.offset) + ": " + d.message;
  if (!d.expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < d.expected.size(); ++i) {
      if (i > 0) out += i + 1 == d.expected.size() ? " or " : ", ";
      out += d.expected[i];
    }
    out += ")";
  }
  return out;
}

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Slash, Caret, End, Invalid };

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) return {TokenKind::End, start, {}};
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {TokenKind::Number, start, src_.substr(start, pos_ - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {TokenKind::Identifier, start, src_.substr(start, pos_ - start)};
    }
    ++pos_;
    switch (c) {
      case '+': return {TokenKind::Plus, start, src_.substr(start, 1)};
      case '-': return {TokenKind::Minus, start, src_.substr(start, 1)};
      case '*': return {TokenKind::Star, start, src_.substr(start, 1)};
      case '/': return {TokenKind::Slash, start, src_.substr(start, 1)};
      case '^': return {TokenKind::Caret, start, src_.substr(start, 1)};
      default: return {TokenKind::Invalid, start, src_.substr(start, 1)};
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : lexer_(src), ring_(ring) { advance(); }

  Poly parse() {
    std::vector<std::pair<Monomial, Rational>> terms;
    bool negative = false;
    if (current_.kind == TokenKind::Minus) {
      negative = true;
      advance();
    }
    terms.push_back(term(negative));
    while (current_.kind == TokenKind::Plus || current_.kind == TokenKind::Minus) {
      negative = current_.kind == TokenKind::Minus;
      advance();
      terms.push_back(term(negative));
    }
    if (current_.kind != TokenKind::End) fail("unexpected token", {"'+'", "'-'", "end of input"});
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
    std::string message = what;
    if (current_.kind == TokenKind::End) {
      message += " at end of input";
    } else {
      message += " '" + std::string(current_.text) + "'";
    }
    throw ParseError({current_.offset, message, std::move(expected)});
  }

  std::pair<Monomial, Rational> term(bool negative) {
    Rational coeff = 1;
    Monomial mono(ring_.arity(), 0);
    if (current_.kind == TokenKind::Number) {
      coeff = coefficient();
      if (current_.kind == TokenKind::Star) {
        advance();
        monomials(mono);
      }
    } else if (current_.kind == TokenKind::Identifier) {
      monomials(mono);
    } else {
      fail("unexpected token", {"number", "identifier"});
    }
    if (negative) coeff = -coeff;
    return {std::move(mono), std::move(coeff)};
  }

  Rational coefficient() {
    mpz_class num(std::string(current_.text));
    advance();
    mpz_class den = 1;
    if (current_.kind == TokenKind::Slash) {
      advance();
      if (current_.kind != TokenKind::Number) fail("unexpected token", {"number"});
      den = mpz_class(std::string(current_.text));
      if (den == 0) fail("zero denominator", {});
      advance();
    }
    return Rational(num, den);
  }

  void monomials(Monomial& mono) {
    factor(mono);
    while (current_.kind == TokenKind::Star) {
      advance();
      if (current_.kind != TokenKind::Identifier) fail("unexpected token", {"identifier"});
      factor(mono);
    }
  }

  void factor(Monomial& mono) {
    auto index = ring_.index_of(current_.text);
    if (!index) {
      throw Error(ErrorKind::UnknownVariable, "'" + std::string(current_.text) + "' at offset " +
                                                  std::to_string(current_.offset));
    }
    advance();
    Exponent e = 1;
    if (current_.kind == TokenKind::Caret) {
      advance();
      if (current_.kind != TokenKind::Number) fail("unexpected token", {"number"});
      mpz_class value(std::string(current_.text));
      if (value > std::numeric_limits<std::uint16_t>::max()) fail("exponent too large", {});
      e = static_cast<Exponent>(value.get_ui());
      advance();
    }
    mono[*index] += e;
  }

  Lexer lexer_;
  const Ring& ring_;
  Token current_{TokenKind::End, 0, {}};
};

void append_monomial(std::string& out, const Monomial& m, const Ring& ring) {
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
}

}  // namespace

ParseError::ParseError(ParseDiagnostic diagnostic)
    : Error(ErrorKind::ParseError, diagnostic_text(diagnostic)), diagnostic_(std::move(diagnostic)) {}

Poly parse_poly(std::string_view src, const Ring& ring) { return Parser(src, ring).parse(); }

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<const Poly::Term*> order;
  for (const auto& term : p.terms()) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](const Poly::Term* a, const Poly::Term* b) {
    return total_degree(a->first) < total_degree(b->first);
  });
  std::string out;
  bool first = true;
  for (const Poly::Term* term : order) {
    const auto& [m, c] = *term;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = c.abs();
    const bool constant = total_degree(m) == 0;
    if (constant || !magnitude.is_one()) {
      out += magnitude.to_string();
      if (!constant) out += '*';
    }
    if (!constant) append_monomial(out, m, p.ring());
  }
  return out;
}

}  // namespace veronese
