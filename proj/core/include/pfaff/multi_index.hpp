#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pfaff {

// Exponent vector k = (k_1, ..., k_m) with non-negative entries.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t vars) : exps_(vars, 0) {}
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::vector<int> exps);

  // e_axis, with 1-based axis.
  static MultiIndex unit(std::size_t vars, std::size_t axis);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  // |k|
  int total() const noexcept;
  bool is_zero() const noexcept { return total() == 0; }

  // True when every entry of *this is >= the matching entry of other.
  bool dominates(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  // Entrywise difference; requires a.dominates(b).
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

  // "(1,0,2)"
  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

// All k with |k| == degree over `vars` variables, in lexicographic order.
std::vector<MultiIndex> indices_of_degree(std::size_t vars, int degree);

}  // namespace pfaff
