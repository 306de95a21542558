#include "pfaff/system.hpp"

#include <algorithm>

#include "pfaff/error.hpp"
#include "pfaff/parser.hpp"

namespace pfaff {

PfaffianSystem PfaffianSystem::from_strings(std::size_t m, std::size_t n, std::vector<int> p,
                                            const std::vector<std::vector<std::string>>& f) {
  std::vector<PolyMap> maps;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Poly> comps;
    for (std::size_t a = 0; a < f[i].size(); ++a) {
      try {
        comps.push_back(parse_expression(f[i][a], m, n));
      } catch (const ParseError& e) {
        throw ParseError(e.position(), e.detail(),
                         "f_" + std::to_string(i + 1) + "[" + std::to_string(a + 1) + "] \"" +
                             f[i][a] + "\"");
      }
    }
    maps.emplace_back(std::move(comps));
  }
  return PfaffianSystem(m, n, std::move(p), std::move(maps));
}

bool PfaffianSystem::is_fuchsian() const {
  return std::all_of(p_.begin(), p_.end(), [](int v) { return v == 1; });
}

int PfaffianSystem::max_y_degree() const {
  int best = 0;
  for (const auto& fm : f_) best = std::max(best, fm.max_y_degree());
  return best;
}

std::vector<std::string> validate(const PfaffianSystem& sys) {
  std::vector<std::string> errors;
  if (sys.m() < 1) errors.push_back("m must be at least 1");
  if (sys.n() < 1) errors.push_back("n must be at least 1");
  if (sys.orders().size() != sys.m()) {
    errors.push_back("expected " + std::to_string(sys.m()) + " orders p, got " +
                     std::to_string(sys.orders().size()));
  }
  for (std::size_t i = 0; i < sys.orders().size(); ++i) {
    if (sys.orders()[i] < 1) errors.push_back("p_" + std::to_string(i + 1) + " < 1");
  }
  if (sys.rhs().size() != sys.m()) {
    errors.push_back("expected " + std::to_string(sys.m()) + " right-hand sides f, got " +
                     std::to_string(sys.rhs().size()));
  }
  for (std::size_t i = 0; i < sys.rhs().size(); ++i) {
    const PolyMap& fm = sys.rhs()[i];
    const std::string name = "f_" + std::to_string(i + 1);
    if (fm.size() != sys.n()) {
      errors.push_back(name + " has " + std::to_string(fm.size()) + " components, expected " +
                       std::to_string(sys.n()));
    }
    if (fm.size() > 0 && (fm.x_vars() != sys.m() || fm.y_vars() != sys.n())) {
      errors.push_back(name + " is over the wrong variable set");
      continue;
    }
    for (const auto& comp : fm) {
      if (comp.constant_term() != 0) {
        errors.push_back("constant term in " + name);
        break;
      }
    }
  }
  return errors;
}

void require_valid(const PfaffianSystem& sys) {
  const auto errors = validate(sys);
  if (errors.empty()) return;
  std::string msg = "invalid system:";
  for (const auto& e : errors) msg += " " + e + ";";
  msg.pop_back();
  throw InvalidSystem(msg);
}

}  // namespace pfaff
