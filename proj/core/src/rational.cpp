#include "pfaff/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "pfaff/error.hpp"

namespace pfaff {

namespace {

// |z| = mantissa * 2^exponent with mantissa in [0.5, 1), keeping the top 64 bits.
struct Decomposed {
  long double mantissa = 0.0L;
  long exponent = 0;
};

Decomposed decompose(const mpz_class& z) {
  mpz_class a = abs(z);
  if (a == 0) return {};
  const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const long shift = bits > 64 ? bits - 64 : 0;
  if (shift > 0) mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  static_assert(sizeof(unsigned long) * 8 >= 64, "unsigned long must hold 64 bits");
  const auto top = mpz_get_ui(a.get_mpz_t());
  const long used = bits - shift;
  return {std::ldexp(static_cast<long double>(top), static_cast<int>(-used)), bits};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  bool negative = false;
  std::size_t offset = begin;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
    ++offset;
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError(offset, "expected an integer numerator");
  if (!all_digits(den)) {
    throw ParseError(offset + num.size() + 1, "expected an unsigned integer denominator");
  }
  Rat value{mpz_class{std::string(num)}, mpz_class{std::string(den)}};
  if (value.get_den() == 0) throw ParseError(offset + num.size() + 1, "zero denominator");
  value.canonicalize();
  return negative ? Rat(-value) : value;
}

long double to_long_double(const Rat& value) {
  if (value == 0) return 0.0L;
  const Decomposed n = decompose(value.get_num());
  const Decomposed d = decompose(value.get_den());
  const long double magnitude =
      std::ldexp(n.mantissa / d.mantissa, static_cast<int>(n.exponent - d.exponent));
  return sgn(value) < 0 ? -magnitude : magnitude;
}

long double log_abs(const Rat& value) {
  if (value == 0) return -std::numeric_limits<long double>::infinity();
  const Decomposed n = decompose(value.get_num());
  const Decomposed d = decompose(value.get_den());
  constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
  return std::log(n.mantissa) - std::log(d.mantissa) +
         static_cast<long double>(n.exponent - d.exponent) * kLn2;
}

}  // namespace pfaff
