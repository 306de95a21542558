#pragma once

#include <string>
#include <string_view>

#include "pfaff/multi_index.hpp"
#include "pfaff/rational.hpp"

namespace pfaff::detail {

// "x1^2*x3" for prefix "x"; empty for the zero index.
inline void append_power_product(std::string& out, std::string_view prefix, const MultiIndex& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty() && out.back() != '*') out += '*';
    out += prefix;
    out += std::to_string(i + 1);
    if (k[i] > 1) {
      out += '^';
      out += std::to_string(k[i]);
    }
  }
}

// Appends a signed term in the form used by the expression grammar.
inline void append_term(std::string& out, const Rat& coeff, const std::string& monomial) {
  const bool negative = sgn(coeff) < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Rat magnitude = abs(coeff);
  if (monomial.empty()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += monomial;
  } else {
    out += to_string(magnitude);
    out += '*';
    out += monomial;
  }
}

}  // namespace pfaff::detail
