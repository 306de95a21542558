#include "pfaff/parser.hpp"

#include <cctype>
#include <string>

#include "pfaff/error.hpp"

namespace pfaff {

namespace {

// Recursive-descent parser over the expression grammar; positions are
// offsets into the original text.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t m, std::size_t n)
      : text_(text), m_(m), n_(n) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Poly result = expr();
    skip_space();
    if (!at_end()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        throw ParseError(pos_, "expected an operator before '" + std::string(1, c) +
                                   "' (implicit multiplication is not allowed)");
      }
      throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long uint_literal(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) throw ParseError(start, std::string("expected ") + what);
    if (d.size() > 9) throw ParseError(start, std::string(what) + " is too large");
    return std::stoul(d);
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term());
      } else if (accept('-')) {
        acc = sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = mul(acc, factor());
    return acc;
  }

  Poly factor() {
    if (accept('-')) return scale(factor(), Rat(-1));
    Poly base = atom();
    if (accept('^')) {
      const unsigned long e = uint_literal("an unsigned exponent");
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y') {
      const std::size_t start = pos_;
      ++pos_;
      const std::string d = digits();
      if (d.empty()) throw ParseError(pos_, "expected a variable index after '" + std::string(1, c) + "'");
      const unsigned long idx = d.size() > 9 ? 0 : std::stoul(d);
      const std::size_t limit = c == 'x' ? m_ : n_;
      if (idx < 1 || idx > limit) {
        throw ParseError(start, "variable " + std::string(1, c) + d + " out of range (" +
                                    std::string(1, c) + "1.." + std::string(1, c) +
                                    std::to_string(limit) + ")");
      }
      return c == 'x' ? Poly::x_var(m_, n_, idx) : Poly::y_var(m_, n_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = digits();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        const std::string den = digits();
        if (den.empty()) throw ParseError(den_pos, "expected a denominator");
        Rat value{mpz_class{literal}, mpz_class{den}};
        if (value.get_den() == 0) throw ParseError(den_pos, "zero denominator");
        value.canonicalize();
        return Poly::constant(m_, n_, value);
      }
      return Poly::constant(m_, n_, Rat(mpz_class(literal)));
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t m_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expression(std::string_view text, std::size_t m, std::size_t n) {
  return ExpressionParser(text, m, n).parse();
}

}  // namespace pfaff
