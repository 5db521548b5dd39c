#include "gld/parser.hpp"

#include <cctype>
#include <string>

#include "gld/errors.hpp"

namespace gld {
namespace {

class Parser {
 public:
  Parser(std::string_view text, RingSignature sig) : s_(text), sig_(sig) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, static_cast<int>(pos_) + 1);
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(sig_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
    long e = integer();
    if (e > 10000) fail("exponent too large");
    Polynomial r = Polynomial::constant(sig_, 1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  long integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 18) fail("integer literal too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (at_end()) fail("expected a term");
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      mpz_class num(std::string(s_.substr(start, pos_ - start)));
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
        std::size_t ds = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        den = mpz_class(std::string(s_.substr(ds, pos_ - ds)));
        if (den == 0) fail("zero denominator");
      }
      if (std::isalpha(static_cast<unsigned char>(peek()))) fail("implicit multiplication is not allowed; use '*'");
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(sig_, q);
    }
    if (c == 'x' || c == 't') {
      std::size_t start = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = start;
        fail(std::string("expected variable index after '") + c + "'");
      }
      long idx = integer();
      int limit = c == 'x' ? sig_.x_vars : sig_.t_vars;
      if (idx < 1 || idx > limit) {
        pos_ = start;
        fail(std::string("variable ") + c + std::to_string(idx) + " outside ring " + to_string(sig_));
      }
      int var = c == 'x' ? static_cast<int>(idx) - 1 : sig_.x_vars + static_cast<int>(idx) - 1;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(')
        fail("implicit multiplication is not allowed; use '*'");
      return Polynomial::monomial(sig_, Monomial::variable(sig_.nvars(), var));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  RingSignature sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, RingSignature sig) { return Parser(text, sig).parse(); }

}  // namespace gld
