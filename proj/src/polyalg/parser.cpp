#include "lndlab/polyalg/parser.hpp"

#include <cctype>
#include <limits>

#include "lndlab/errors.hpp"

namespace lnd::polyalg {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        acc *= d.constant_term().inverse();
      } else {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
          fail("implicit multiplication is not allowed");
        }
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail("exponent must be a nonnegative integer");
      }
      mpz_class e = integer();
      if (e > std::numeric_limits<std::uint32_t>::max() / 2) fail("exponent too large");
      return pow(base, static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, Coeff(mpq_class(integer())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(src_.substr(start, pos_ - start));
      if (name == "I") return Polynomial::constant(ring_, Coeff::imaginary_unit());
      if (!ring_.index_of(name)) throw UnknownVariable(name);
      return Polynomial::variable(ring_, name);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, const Ring& ring) { return Parser(src, ring).parse(); }

Coeff parse_coeff(std::string_view src) { return parse_poly(src, Ring()).constant_term(); }

}  // namespace lnd::polyalg
