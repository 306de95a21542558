#include "pfaff_cli/documents.hpp"

#include <algorithm>
#include <fstream>

#include "pfaff/error.hpp"

namespace pfaff::cli {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw DocumentError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::size_t positive_size(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw DocumentError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

Rat rational_field(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  throw DocumentError("coefficients must be rational strings \"p/q\"");
}

std::pair<MultiIndex, std::vector<Rat>> entry_from_json(const json& e, std::size_t m, std::size_t n) {
  const json& k = field(e, "k");
  const json& c = field(e, "c");
  if (!k.is_array() || (m != 0 && k.size() != m)) {
    throw DocumentError("multi-index \"k\" must list " + std::to_string(m) + " exponents");
  }
  std::vector<int> exps;
  for (const auto& x : k) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw DocumentError("multi-index exponents must be non-negative integers");
    }
    exps.push_back(x.get<int>());
  }
  if (!c.is_array() || (n != 0 && c.size() != n)) {
    throw DocumentError("coefficient list \"c\" must have " + std::to_string(n) + " entries");
  }
  std::vector<Rat> values;
  for (const auto& v : c) values.push_back(rational_field(v));
  return {MultiIndex(exps), std::move(values)};
}

}  // namespace

PfaffianSystem system_from_json(const json& doc) {
  const std::size_t m = positive_size(doc, "m");
  const std::size_t n = positive_size(doc, "n");
  const json& p = field(doc, "p");
  const json& f = field(doc, "f");
  if (!p.is_array() || p.size() != m) throw DocumentError("\"p\" must list m orders");
  if (!f.is_array() || f.size() != m) throw DocumentError("\"f\" must list m right-hand sides");
  std::vector<int> orders;
  for (const auto& v : p) {
    if (!v.is_number_integer()) throw DocumentError("orders in \"p\" must be integers");
    orders.push_back(v.get<int>());
  }
  std::vector<std::vector<std::string>> exprs;
  for (const auto& row : f) {
    if (!row.is_array() || row.size() != n) {
      throw DocumentError("each entry of \"f\" must list n expressions");
    }
    std::vector<std::string> comps;
    for (const auto& e : row) {
      if (!e.is_string()) throw DocumentError("expressions in \"f\" must be strings");
      comps.push_back(e.get<std::string>());
    }
    exprs.push_back(std::move(comps));
  }
  PfaffianSystem sys = PfaffianSystem::from_strings(m, n, std::move(orders), exprs);
  require_valid(sys);
  return sys;
}

json system_to_json(const PfaffianSystem& sys) {
  json f = json::array();
  for (const auto& fi : sys.rhs()) {
    json row = json::array();
    for (const auto& comp : fi) row.push_back(comp.to_string());
    f.push_back(std::move(row));
  }
  return {{"m", sys.m()}, {"n", sys.n()}, {"p", sys.orders()}, {"f", std::move(f)}};
}

SolutionDocument solution_from_json(const json& doc) {
  SolutionDocument out;
  out.m = positive_size(doc, "m");
  out.n = positive_size(doc, "n");
  out.order = static_cast<int>(positive_size(doc, "order"));
  const json& coeffs = field(doc, "coefficients");
  if (!coeffs.is_array()) throw DocumentError("\"coefficients\" must be an array");
  std::vector<Series> comps(out.n, Series(out.m, out.order));
  for (const auto& e : coeffs) {
    auto [k, values] = entry_from_json(e, out.m, out.n);
    if (k.total() < 1) throw DocumentError("coefficient index " + k.to_string() + " has |k| = 0");
    if (k.total() > out.order) {
      throw DocumentError("coefficient index " + k.to_string() + " exceeds the order");
    }
    for (std::size_t a = 0; a < out.n; ++a) comps[a].add_term(k, values[a]);
  }
  out.phi = SeriesVec(std::move(comps));
  return out;
}

json solution_to_json(const SeriesVec& phi) {
  std::map<MultiIndex, std::vector<Rat>> entries;
  for (std::size_t a = 0; a < phi.size(); ++a) {
    for (const auto& [k, c] : phi[a].terms()) {
      auto& slot = entries[k];
      slot.resize(phi.size());
      slot[a] = c;
    }
  }
  // Ascending total degree, then lexicographic.
  std::vector<std::pair<MultiIndex, std::vector<Rat>>> ordered(entries.begin(), entries.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& l, const auto& r) { return l.first.total() < r.first.total(); });
  json list = json::array();
  for (const auto& [k, values] : ordered) {
    json kj = json::array();
    for (std::size_t i = 0; i < k.size(); ++i) kj.push_back(k[i]);
    json cj = json::array();
    for (const auto& v : values) cj.push_back(to_string(v));
    list.push_back({{"k", std::move(kj)}, {"c", std::move(cj)}});
  }
  return {{"m", phi.vars()}, {"n", phi.size()}, {"order", phi.trunc()}, {"coefficients", std::move(list)}};
}

std::map<MultiIndex, std::vector<Rat>> assignments_from_json(const json& doc) {
  const char* key = doc.is_object() && doc.contains("assignments") ? "assignments" : "coefficients";
  const json& list = field(doc, key);
  if (!list.is_array()) throw DocumentError(std::string("\"") + key + "\" must be an array");
  std::map<MultiIndex, std::vector<Rat>> out;
  for (const auto& e : list) {
    auto [k, values] = entry_from_json(e, 0, 0);
    out[std::move(k)] = std::move(values);
  }
  return out;
}

FreePolicy parse_free_policy(const std::string& text) {
  if (text == "zero") return FreePolicy::zero();
  if (text == "fail") return FreePolicy::fail();
  const std::string prefix = "value:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    return FreePolicy::with_values(assignments_from_json(read_json_file(text.substr(prefix.size()))));
  }
  throw DocumentError("unknown free policy '" + text + "' (expected zero, fail or value:<file>)");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + ": invalid JSON: " + e.what());
  }
}

}  // namespace pfaff::cli
