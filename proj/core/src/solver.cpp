#include "pfaff/solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

#include "pfaff/error.hpp"
#include "pfaff/integrability.hpp"
#include "pfaff/linalg.hpp"

namespace pfaff {

std::string_view to_string(CoeffStatus s) {
  switch (s) {
    case CoeffStatus::Determined:
      return "Determined";
    case CoeffStatus::Free:
      return "Free";
    case CoeffStatus::ForcedConsistency:
      return "ForcedConsistency";
  }
  return "?";
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "Solved";
    case SolveStatus::Inconsistent:
      return "Inconsistent";
    case SolveStatus::Aborted:
      return "Aborted";
  }
  return "?";
}

bool LedgerEntry::has_free() const {
  return std::find(components.begin(), components.end(), CoeffStatus::Free) != components.end();
}

CoeffStatus LedgerEntry::summary() const {
  if (has_free()) return CoeffStatus::Free;
  if (std::find(components.begin(), components.end(), CoeffStatus::ForcedConsistency) !=
      components.end()) {
    return CoeffStatus::ForcedConsistency;
  }
  return CoeffStatus::Determined;
}

std::vector<SeriesVec> residual(const PfaffianSystem& sys, const SeriesVec& phi) {
  if (phi.size() != sys.n() || phi.vars() != sys.m()) {
    throw ShapeError("solution shape does not match the system");
  }
  if (phi.trunc() < 1) throw DomainError("residual needs a truncation of at least 1");
  const int trunc = phi.trunc();
  std::vector<SeriesVec> out;
  for (std::size_t i = 1; i <= sys.m(); ++i) {
    const SeriesVec rhs = eval_series(sys.f(i), phi);
    std::vector<Series> comps;
    for (std::size_t a = 0; a < sys.n(); ++a) {
      const Series lhs = mul_axis_power(partial(phi[a], i), i, sys.p(i)).truncated(trunc);
      comps.push_back(sub(lhs, rhs[a]));
    }
    out.emplace_back(std::move(comps));
  }
  return out;
}

VerifyReport verify(const PfaffianSystem& sys, const SeriesVec& phi) {
  VerifyReport report;
  report.trunc = phi.trunc();
  report.verified_degree = phi.trunc();
  const auto res = residual(sys, phi);
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (std::size_t a = 0; a < res[i].size(); ++a) {
      for (const auto& [k, c] : res[i][a].terms()) {
        const int d = k.total();
        if (d - 1 < report.verified_degree ||
            (report.failure && d - 1 == report.verified_degree && k < report.failure->index)) {
          report.verified_degree = d - 1;
          report.failure = ResidualWitness{i + 1, a + 1, k, c};
        }
      }
    }
  }
  for (std::size_t i = 1; i <= sys.m(); ++i) {
    for (std::size_t j = i + 1; j <= sys.m(); ++j) {
      const SeriesVec defect = defect_on_solution(sys, phi, i, j);
      DefectCheck check{i, j, true, report.verified_degree};
      for (const auto& s : defect) {
        for (const auto& [k, c] : s.terms()) {
          if (k.total() <= report.verified_degree) check.vanishes = false;
        }
      }
      report.defects.push_back(check);
    }
  }
  return report;
}

namespace {

// An unknown coefficient that is still symbolic. phi depends on it affinely
// through `direction`, which has coefficient 1 at (home, component) and 0
// at every other pending unknown's home.
struct PendingUnknown {
  MultiIndex home;
  std::size_t component = 0;  // 0-based
  std::vector<Series> direction;
};

class GradedSolver {
 public:
  GradedSolver(const PfaffianSystem& sys, int order, const FreePolicy& policy)
      : sys_(sys), order_(order), policy_(policy) {
    m_ = sys.m();
    n_ = sys.n();
    int max_p = 1;
    for (int p : sys.orders()) max_p = std::max(max_p, p);
    lookahead_ = max_p - 1;
    working_ = order + lookahead_;
    nonlinear_ = sys.max_y_degree() >= 2;
    for (std::size_t i = 1; i <= m_; ++i) jac0_.push_back(jacobian_y_at_origin(sys.f(i)));
    phi_.assign(n_, Series(m_, working_));
  }

  SolveResult run() {
    SolveResult result;
    result.report.lookahead = lookahead_;
    for (int d = 1; d <= working_; ++d) {
      if (nonlinear_) {
        // Products of two pending unknowns reach degree d once 2e <= d; fix
        // them first so that the rows below stay affine.
        std::vector<PendingUnknown> keep;
        for (auto& u : pending_) {
          if (2 * min_degree(u.direction) <= d) {
            if (!finalize(u, result.report)) return finish(result, SolveStatus::Aborted);
          } else {
            keep.push_back(std::move(u));
          }
        }
        pending_ = std::move(keep);
      }
      if (!solve_degree(d, result.report)) return finish(result, SolveStatus::Inconsistent);
      solved_through_ = d;
    }
    for (auto& u : pending_) {
      if (!finalize(u, result.report)) return finish(result, SolveStatus::Aborted);
    }
    pending_.clear();
    return finish(result, SolveStatus::Solved);
  }

 private:
  static int min_degree(const std::vector<Series>& v) {
    int best = std::numeric_limits<int>::max();
    for (const auto& s : v) {
      if (auto d = s.lowest_degree()) best = std::min(best, *d);
    }
    return best;
  }

  std::vector<Series> unit_direction(const MultiIndex& k, std::size_t b) const {
    std::vector<Series> dir(n_, Series(m_, working_));
    dir[b].add_term(k, Rat(1));
    return dir;
  }

  void axpy(std::vector<Series>& target, const Rat& factor, const std::vector<Series>& dir) const {
    if (factor == 0) return;
    for (std::size_t b = 0; b < n_; ++b) {
      for (const auto& [k, c] : dir[b].terms()) target[b].add_term(k, factor * c);
    }
  }

  bool finalize(const PendingUnknown& u, SolveReport& report) {
    const bool visible = u.home.total() <= order_;
    for (std::size_t b = 0; b < n_; ++b) {
      for (const auto& [k, c] : u.direction[b].terms()) {
        if (k.total() <= order_ && !(k == u.home && b == u.component)) forced_.insert({k, b});
      }
    }
    Rat value = 0;
    if (visible) {
      if (policy_.kind == FreePolicy::Kind::Fail) {
        report.message = "free coefficient at index " + u.home.to_string() + ", component " +
                         std::to_string(u.component + 1) + " (free policy 'fail')";
        return false;
      }
      if (policy_.kind == FreePolicy::Kind::Value) {
        const auto it = policy_.values.find(u.home);
        if (it != policy_.values.end() && u.component < it->second.size()) {
          value = it->second[u.component];
        }
      }
      status_[{u.home, u.component}] = CoeffStatus::Free;
      assigned_[{u.home, u.component}] = value;
    }
    axpy(phi_, value, u.direction);
    return true;
  }

  // Residual coefficients of degree d, row order (l, i, a) with l in
  // lexicographic order.
  std::vector<Rat> residual_rows(const std::vector<Series>& phi, int d,
                                 const std::vector<MultiIndex>& indices) const {
    std::vector<Series> comps;
    for (const auto& s : phi) comps.push_back(s.truncated(d));
    const auto res = residual(sys_, SeriesVec(std::move(comps)));
    std::vector<Rat> rows;
    rows.reserve(indices.size() * m_ * n_);
    for (const auto& l : indices) {
      for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t a = 0; a < n_; ++a) rows.push_back(res[i][a].coeff(l));
      }
    }
    return rows;
  }

  // A column of the degree-d system: either a pending unknown or the new
  // coefficient (index, component).
  struct Column {
    bool is_pending;
    std::size_t pending;  // index into pending_
    std::size_t index;    // index into indices
    std::size_t component;
  };

  bool solve_degree(int d, SolveReport& report) {
    const std::vector<MultiIndex> indices = indices_of_degree(m_, d);
    const std::vector<Rat> base = residual_rows(phi_, d, indices);
    const std::size_t rows_per_index = m_ * n_;

    // Entry of the new-coefficient block: row (i, a), column b at index l.
    auto new_entry = [&](const MultiIndex& l, std::size_t i, std::size_t a, std::size_t b) {
      Rat v = -jac0_[i](a, b);
      if (sys_.p(i + 1) == 1 && a == b) v += l[i];
      return v;
    };

    std::vector<std::vector<Rat>> pending_cols;
    for (const auto& u : pending_) {
      std::vector<Series> shifted = phi_;
      axpy(shifted, Rat(1), u.direction);
      std::vector<Rat> col = residual_rows(shifted, d, indices);
      for (std::size_t r = 0; r < col.size(); ++r) col[r] -= base[r];
      pending_cols.push_back(std::move(col));
    }

    // Blocks: one per index when nothing is pending, otherwise one coupled block.
    std::vector<std::vector<std::size_t>> blocks;
    if (pending_.empty()) {
      for (std::size_t li = 0; li < indices.size(); ++li) blocks.push_back({li});
    } else {
      std::vector<std::size_t> all(indices.size());
      for (std::size_t li = 0; li < indices.size(); ++li) all[li] = li;
      blocks.push_back(std::move(all));
    }

    std::vector<PendingUnknown> next_pending;
    std::vector<Series> update(n_, Series(m_, working_));

    for (const auto& block : blocks) {
      std::vector<Column> cols;
      if (!pending_.empty()) {
        for (std::size_t q = 0; q < pending_.size(); ++q) cols.push_back({true, q, 0, 0});
      }
      for (std::size_t li : block) {
        for (std::size_t b = 0; b < n_; ++b) cols.push_back({false, 0, li, b});
      }
      RatMat mat(block.size() * rows_per_index, cols.size());
      std::vector<Rat> rhs(mat.rows());
      std::vector<std::size_t> row_global(mat.rows());
      for (std::size_t bi = 0; bi < block.size(); ++bi) {
        const std::size_t li = block[bi];
        for (std::size_t r = 0; r < rows_per_index; ++r) {
          const std::size_t local = bi * rows_per_index + r;
          const std::size_t global = li * rows_per_index + r;
          row_global[local] = global;
          rhs[local] = -base[global];
          const std::size_t i = r / n_;
          const std::size_t a = r % n_;
          for (std::size_t c = 0; c < cols.size(); ++c) {
            const Column& col = cols[c];
            if (col.is_pending) {
              mat(local, c) = pending_cols[col.pending][global];
            } else if (col.index == li) {
              mat(local, c) = new_entry(indices[li], i, a, col.component);
            }
          }
        }
      }

      const AffineSolution sol = solve_affine(mat, rhs);
      if (!sol.consistent) {
        const std::size_t global = row_global[sol.inconsistent_row];
        InconsistencyWitness w;
        w.index = indices[global / rows_per_index];
        w.equation = (global % rows_per_index) / n_ + 1;
        w.component = global % n_ + 1;
        w.value = sol.inconsistent_value;
        w.row_text = "0 = " + to_string(sol.inconsistent_value);
        report.message = "no formal solution: equation " + std::to_string(w.equation) +
                         ", component " + std::to_string(w.component) + " at index " +
                         w.index.to_string() + " reduces to " + w.row_text;
        report.inconsistency = std::move(w);
        return false;
      }

      auto direction_of = [&](const Column& col) {
        return col.is_pending ? pending_[col.pending].direction
                              : unit_direction(indices[col.index], col.component);
      };
      auto home_of = [&](const Column& col) {
        return col.is_pending ? std::pair{pending_[col.pending].home, pending_[col.pending].component}
                              : std::pair{indices[col.index], col.component};
      };

      std::vector<std::vector<Series>> pivot_dirs;
      for (std::size_t r = 0; r < sol.pivot_cols.size(); ++r) {
        const Column& col = cols[sol.pivot_cols[r]];
        pivot_dirs.push_back(direction_of(col));
        axpy(update, sol.pivot_rhs[r], pivot_dirs.back());
        const auto home = home_of(col);
        if (home.first.total() <= order_) {
          status_[home] = CoeffStatus::Determined;
        }
      }
      for (std::size_t f = 0; f < sol.free_cols.size(); ++f) {
        const Column& col = cols[sol.free_cols[f]];
        PendingUnknown u;
        std::tie(u.home, u.component) = home_of(col);
        u.direction = direction_of(col);
        for (std::size_t r = 0; r < sol.pivot_cols.size(); ++r) {
          axpy(u.direction, -sol.pivot_free[r][f], pivot_dirs[r]);
        }
        next_pending.push_back(std::move(u));
      }
    }

    axpy(phi_, Rat(1), update);
    pending_ = std::move(next_pending);
    return true;
  }

  SolveResult& finish(SolveResult& result, SolveStatus status) {
    result.report.status = status;
    const int reach = std::max(1, order_);
    std::vector<Series> comps;
    for (const auto& s : phi_) comps.push_back(s.truncated(reach));
    FormalSolution& sol = result.solution;
    sol.phi = SeriesVec(std::move(comps));
    sol.order = order_;

    for (int d = 1; d <= std::min(order_, solved_through_); ++d) {
      DegreeCounts counts{d, 0, 0, 0};
      for (const auto& k : indices_of_degree(m_, d)) {
        LedgerEntry entry;
        for (std::size_t b = 0; b < n_; ++b) {
          const auto it = status_.find({k, b});
          CoeffStatus s = it == status_.end() ? CoeffStatus::Determined : it->second;
          if (s == CoeffStatus::Determined && forced_.count({k, b})) s = CoeffStatus::ForcedConsistency;
          entry.components.push_back(s);
          const auto av = assigned_.find({k, b});
          entry.assigned.push_back(av == assigned_.end() ? Rat(0) : av->second);
          if (s == CoeffStatus::Free) {
            ++counts.free;
            result.report.free_parameters.push_back({k, b + 1, entry.assigned.back()});
          } else if (s == CoeffStatus::ForcedConsistency) {
            ++counts.forced;
          } else {
            ++counts.determined;
          }
        }
        sol.ledger.emplace(k, std::move(entry));
      }
      result.report.per_degree.push_back(counts);
    }

    if (status == SolveStatus::Solved) {
      const VerifyReport check = verify(sys_, sol.phi);
      if (!check.ok()) {
        throw std::logic_error("solver produced a residual that does not vanish through degree " +
                               std::to_string(order_));
      }
      result.report.message = "solved through degree " + std::to_string(order_);
    }
    return result;
  }

  const PfaffianSystem& sys_;
  int order_;
  const FreePolicy& policy_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  int lookahead_ = 0;
  int working_ = 0;
  int solved_through_ = 0;
  bool nonlinear_ = false;
  std::vector<RatMat> jac0_;
  std::vector<Series> phi_;
  std::vector<PendingUnknown> pending_;
  std::map<std::pair<MultiIndex, std::size_t>, CoeffStatus> status_;
  std::map<std::pair<MultiIndex, std::size_t>, Rat> assigned_;
  // Coefficients that move when some free parameter moves.
  std::set<std::pair<MultiIndex, std::size_t>> forced_;
};

}  // namespace

SolveResult solve_formal(const PfaffianSystem& sys, int order, const FreePolicy& policy) {
  require_valid(sys);
  if (order < 1) throw DomainError("solve order must be at least 1");
  return GradedSolver(sys, order, policy).run();
}

SeriesMat restricted_jacobian_A(const PfaffianSystem& sys, const SeriesVec& phi) {
  if (sys.p(1) != 1) throw DomainError("restricted Jacobian A requires p_1 == 1");
  if (phi.size() != sys.n() || phi.vars() != sys.m()) {
    throw ShapeError("solution shape does not match the system");
  }
  const SeriesMat full = eval_series(jacobian_y(sys.f(1)), phi);
  std::vector<Series> entries;
  for (std::size_t r = 0; r < full.dim(); ++r) {
    for (std::size_t c = 0; c < full.dim(); ++c) entries.push_back(restrict_axis(full(r, c), 1));
  }
  return SeriesMat(full.dim(), std::move(entries));
}

FormalSolution layered_solve_axis1(const PfaffianSystem& sys, int order, const SeriesVec& c0,
                                   const std::map<int, SeriesVec>& pinned) {
  require_valid(sys);
  if (sys.p(1) != 1) throw DomainError("layered solve requires p_1 == 1");
  if (order < 1) throw DomainError("solve order must be at least 1");
  if (c0.size() != sys.n() || c0.vars() != sys.m()) throw ShapeError("c0 shape does not match the system");
  if (c0.trunc() < order) throw DomainError("c0 must be known through the requested order");
  for (const auto& s : c0) {
    if (restrict_axis(s, 1) != s) throw DomainError("c0 must not depend on x_1");
  }
  const std::size_t m = sys.m();
  const std::size_t n = sys.n();
  const SeriesVec base = c0.truncated(order);
  {
    const SeriesVec at0 = eval_series(sys.f(1), base);
    for (const auto& s : at0) {
      if (!restrict_axis(s, 1).is_zero()) {
        throw DomainError("c0 does not satisfy f_1(0, x', c0) = 0 through the truncation");
      }
    }
  }
  const SeriesMat a_full = restricted_jacobian_A(sys, base);

  std::vector<Series> phi(base.begin(), base.end());
  FormalSolution out;
  out.order = order;
  std::map<int, bool> pinned_used;

  for (int j = 1; j <= order; ++j) {
    const int layer_trunc = order - j;
    const SeriesVec f1 = eval_series(sys.f(1), SeriesVec(phi));
    std::vector<Series> h;
    for (const auto& s : f1) h.push_back(scale(axis_layer(s, 1, j), Rat(-1)));
    std::vector<Series> a_entries;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a_entries.push_back(a_full(r, c).truncated(layer_trunc));
    }
    const SeriesMat shifted = shift_diagonal(SeriesMat(n, std::move(a_entries)), Rat(j));
    const SeriesVec rhs{std::move(h)};

    SeriesVec cj;
    if (det(shifted).constant_term() == 0) {
      const auto it = pinned.find(j);
      if (it == pinned.end()) {
        throw NonUnitMatrix("det(A - " + std::to_string(j) + "I) has zero constant term", j);
      }
      cj = it->second.truncated(layer_trunc);
      if (sub(mat_vec(shifted, cj), rhs) != SeriesVec::zeros(n, m, layer_trunc)) {
        throw DomainError("pinned layer " + std::to_string(j) + " does not satisfy (A - jI) c_j = h_j");
      }
      pinned_used[j] = true;
    } else {
      cj = solve_linear_series(shifted, rhs);
    }
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [k, c] : cj[b].terms()) {
        MultiIndex lifted = k;
        lifted[0] += j;
        phi[b].add_term(lifted, c);
      }
    }
  }

  out.phi = SeriesVec(std::move(phi));
  for (int d = 1; d <= order; ++d) {
    for (const auto& k : indices_of_degree(m, d)) {
      LedgerEntry entry;
      const bool free_layer = pinned_used.count(k[0]) > 0;
      for (std::size_t b = 0; b < n; ++b) {
        entry.components.push_back(free_layer ? CoeffStatus::Free : CoeffStatus::Determined);
        entry.assigned.push_back(free_layer ? out.phi[b].coeff(k) : Rat(0));
      }
      out.ledger.emplace(k, std::move(entry));
    }
  }
  return out;
}

}  // namespace pfaff
