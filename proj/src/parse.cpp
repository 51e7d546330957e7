#include "nccr/parse.hpp"

#include <cctype>

namespace nccr {

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  RingPtr ring;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) {
    fail(Errc::SyntaxError, what + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) error("expected integer");
    return BigInt(s.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      error("expected identifier");
    ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(ring, Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      auto idx = ring->var_index(name);
      if (!idx) fail(Errc::UnknownVariable, "unknown variable '" + name + "'");
      return Polynomial::variable(ring, *idx);
    }
    error("expected number, variable, or '('");
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_ws();
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        fail(Errc::NonIntegerExponent, "exponent must be a nonnegative integer");
      BigInt e = integer();
      if (!e.fits_sint_p())
        fail(Errc::CapExceeded, "exponent too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  Polynomial factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return power();
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          fail(Errc::SyntaxError, "'/' divides by a nonzero constant only");
        p *= Rational(1) / d.terms()[0].c;
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Parser p{text, 0, ring};
  Polynomial result = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.error("unexpected trailing input");
  return result;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\r\n") != std::string::npos)
        out.push_back(parse_polynomial(piece, ring));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace nccr
