#include "pfaff/multi_index.hpp"

#include <numeric>

#include "pfaff/error.hpp"

namespace pfaff {

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("multi-index entries must be non-negative");
  }
}

MultiIndex MultiIndex::unit(std::size_t vars, std::size_t axis) {
  if (axis < 1 || axis > vars) throw DomainError("axis out of range");
  MultiIndex k(vars);
  k[axis - 1] = 1;
  return k;
}

int MultiIndex::total() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool MultiIndex::dominates(const MultiIndex& other) const {
  if (size() != other.size()) throw ShapeError("multi-index length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (size() != other.size()) throw ShapeError("multi-index length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!a.dominates(b)) throw DomainError("multi-index difference would be negative");
  MultiIndex out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

namespace {

void fill(std::vector<MultiIndex>& out, MultiIndex& cur, std::size_t pos, int remaining) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    fill(out, cur, pos + 1, remaining - e);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t vars, int degree) {
  std::vector<MultiIndex> out;
  if (vars == 0 || degree < 0) return out;
  MultiIndex cur(vars);
  fill(out, cur, 0, degree);
  return out;
}

}  // namespace pfaff
