#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfaff/poly.hpp"

namespace pfaff {

// x_i^{p_i} dy/dx_i = f_i(x, y), i = 1..m, with y = (y_1..y_n).
class PfaffianSystem {
 public:
  PfaffianSystem() = default;
  PfaffianSystem(std::size_t m, std::size_t n, std::vector<int> p, std::vector<PolyMap> f)
      : m_(m), n_(n), p_(std::move(p)), f_(std::move(f)) {}

  // Builds from expression text, f[i][a] being component a of f_{i+1}.
  // Throws ParseError (message prefixed with the location) on bad text.
  static PfaffianSystem from_strings(std::size_t m, std::size_t n, std::vector<int> p,
                                     const std::vector<std::vector<std::string>>& f);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  // 1-based.
  int p(std::size_t i) const { return p_.at(i - 1); }
  const PolyMap& f(std::size_t i) const { return f_.at(i - 1); }
  const std::vector<int>& orders() const noexcept { return p_; }
  const std::vector<PolyMap>& rhs() const noexcept { return f_; }

  bool is_fuchsian() const;
  int max_y_degree() const;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<int> p_;
  std::vector<PolyMap> f_;
};

// Every violation of the structural requirements (p_i >= 1, f_i(0,0) = 0,
// consistent shapes); empty when the system is valid.
std::vector<std::string> validate(const PfaffianSystem& sys);

// Throws InvalidSystem listing the violations.
void require_valid(const PfaffianSystem& sys);

}  // namespace pfaff
