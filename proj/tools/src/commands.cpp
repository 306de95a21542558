#include "pfaff_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "pfaff/criteria.hpp"
#include "pfaff/diagnostics.hpp"
#include "pfaff/error.hpp"
#include "pfaff/integrability.hpp"
#include "pfaff_cli/documents.hpp"

namespace pfaff::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string system;
  std::string solution;
  int order = 12;
  std::string policy = "zero";
  std::optional<std::int64_t> eig_bound;
  std::string emit = "text";
  std::string out;
  std::string ray = "diagonal";
};

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DocumentError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

json index_json(const MultiIndex& k) {
  json out = json::array();
  for (std::size_t i = 0; i < k.size(); ++i) out.push_back(k[i]);
  return out;
}

json verdict_json(const Verdict& v) {
  const Certificate& c = v.certificate;
  json cert = {{"indices", c.indices}, {"witness", c.witness}, {"detail", c.detail}};
  cert["eigenvalue"] = c.eigenvalue ? json(*c.eigenvalue) : json(nullptr);
  cert["verified_order"] = c.verified_order ? json(*c.verified_order) : json(nullptr);
  json out = {{"theorem", v.theorem},
              {"status", std::string(to_string(v.status))},
              {"certificate", std::move(cert)},
              {"conclusion", v.conclusion},
              {"notes", v.notes}};
  out["order"] = v.order ? json(*v.order) : json(nullptr);
  return out;
}

std::string components_text(const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts.front();
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + "]";
}

// ---- solve ---------------------------------------------------------------

json solve_report_json(const SolveResult& r) {
  const SolveReport& rep = r.report;
  json out = {{"status", std::string(to_string(rep.status))},
              {"order", r.solution.order},
              {"lookahead", rep.lookahead},
              {"message", rep.message}};
  json degrees = json::array();
  for (const auto& d : rep.per_degree) {
    degrees.push_back({{"degree", d.degree}, {"determined", d.determined}, {"free", d.free},
                       {"forced", d.forced}});
  }
  out["per_degree"] = std::move(degrees);
  json free = json::array();
  for (const auto& f : rep.free_parameters) {
    free.push_back({{"k", index_json(f.index)}, {"component", f.component}, {"value", to_string(f.value)}});
  }
  out["free_parameters"] = std::move(free);
  if (rep.inconsistency) {
    const auto& w = *rep.inconsistency;
    out["inconsistency"] = {{"k", index_json(w.index)},
                            {"equation", w.equation},
                            {"component", w.component},
                            {"row", w.row_text}};
  }
  return out;
}

void solve_report_text(std::ostream& os, const SolveResult& r) {
  const SolveReport& rep = r.report;
  os << "status: " << to_string(rep.status) << '\n';
  if (!rep.message.empty()) os << "message: " << rep.message << '\n';
  if (rep.inconsistency) {
    const auto& w = *rep.inconsistency;
    os << "inconsistency: index k=" << w.index.to_string() << ", equation " << w.equation
       << ", component " << w.component << ", row " << w.row_text << '\n';
    return;
  }
  if (rep.status != SolveStatus::Solved) return;
  os << "order: " << r.solution.order << " (lookahead " << rep.lookahead << ")\n";
  for (const auto& d : rep.per_degree) {
    if (d.degree > r.solution.order) continue;
    os << "degree " << d.degree << ": " << d.determined << " determined, " << d.free << " free, "
       << d.forced << " forced\n";
  }
  if (rep.free_parameters.empty()) {
    os << "free parameters: none\n";
  } else {
    for (const auto& f : rep.free_parameters) {
      os << "free parameter: k=" << f.index.to_string() << " component " << f.component << " = "
         << to_string(f.value) << '\n';
    }
  }
}

int cmd_solve(const Options& o, std::ostream& out) {
  const PfaffianSystem sys = system_from_json(read_json_file(o.system));
  const FreePolicy policy = parse_free_policy(o.policy);
  const SolveResult result = solve_formal(sys, o.order, policy);
  const bool solved = result.report.status == SolveStatus::Solved;

  if (solved && !o.out.empty()) {
    Sink file(o.out, out);
    *file << solution_to_json(result.solution.phi).dump(2) << '\n';
  }
  if (o.emit == "json") {
    json doc = {{"report", solve_report_json(result)}};
    if (solved && o.out.empty()) doc["solution"] = solution_to_json(result.solution.phi);
    out << doc.dump(2) << '\n';
  } else {
    solve_report_text(out, result);
    if (solved && o.out.empty()) {
      for (std::size_t a = 0; a < result.solution.phi.size(); ++a) {
        out << "phi[" << (a + 1) << "] = " << result.solution.phi[a].to_string() << '\n';
      }
    } else if (solved) {
      out << "solution written to " << o.out << '\n';
    }
  }
  return solved ? kOk : kRejected;
}

// ---- check ---------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  const PfaffianSystem sys = system_from_json(read_json_file(o.system));
  const SolutionDocument sol = solution_from_json(read_json_file(o.solution));
  if (sol.m != sys.m() || sol.n != sys.n()) {
    throw DocumentError("solution shape (m=" + std::to_string(sol.m) + ", n=" + std::to_string(sol.n) +
                        ") does not match the system (m=" + std::to_string(sys.m()) +
                        ", n=" + std::to_string(sys.n()) + ")");
  }
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  const VerifyReport vr = verify(sys, sol.phi);

  json doc;
  if (o.emit == "json") {
    doc["verified_degree"] = vr.verified_degree;
    doc["order"] = vr.trunc;
    json defects = json::array();
    for (const auto& d : vr.defects) {
      defects.push_back({{"i", d.i}, {"j", d.j}, {"vanishes", d.vanishes}, {"checked_degree", d.checked_degree}});
    }
    doc["defects"] = std::move(defects);
  } else {
    os << "residual verified through degree " << vr.verified_degree << " of " << vr.trunc << '\n';
  }
  if (!vr.ok()) {
    const auto& w = *vr.failure;
    const std::string text = "residual of equation " + std::to_string(w.equation) + ", component " +
                             std::to_string(w.component) + " has coefficient " + to_string(w.coeff) +
                             " at k=" + w.index.to_string() + "; solution rejected";
    if (o.emit == "json") {
      doc["rejected"] = text;
      os << doc.dump(2) << '\n';
    } else {
      os << text << '\n';
    }
    return kRejected;
  }

  CriteriaOptions copts;
  copts.eig_bound = o.eig_bound;
  const CriteriaReport report = run_all(sys, sol.phi, copts);
  if (o.emit == "json") {
    json verdicts = json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(verdict_json(v));
    doc["verdicts"] = std::move(verdicts);
    doc["convergence_certified"] = report.convergence_certified;
    doc["certified_by"] = report.certified_by;
    doc["summary"] = report.summary;
    os << doc.dump(2) << '\n';
    return kOk;
  }
  for (const auto& d : vr.defects) {
    os << "F_" << d.i << d.j << " on solution " << (d.vanishes ? "vanishes" : "does not vanish")
       << " through degree " << d.checked_degree << '\n';
  }
  for (const auto& v : report.verdicts) {
    os << summary_line(v) << '\n';
    for (const auto& n : v.notes) os << "  note: " << n << '\n';
  }
  os << "overall: " << report.summary << '\n';
  return kOk;
}

// ---- integrability -------------------------------------------------------

int cmd_integrability(const Options& o, std::ostream& out) {
  const PfaffianSystem sys = system_from_json(read_json_file(o.system));
  const DefectSet defects = compat_defects(sys);
  const Verdict v = is_completely_integrable(sys);
  const bool integrable = v.holds();
  const std::string head = sys.m() == 1 ? "vacuously integrable"
                                        : (integrable ? "completely integrable" : "not integrable");
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  if (o.emit == "json") {
    json list = json::array();
    for (const auto& [ij, f] : defects) {
      std::vector<std::string> comps;
      for (const auto& c : f) comps.push_back(c.to_string());
      list.push_back({{"i", ij.first}, {"j", ij.second}, {"F", comps}});
    }
    os << json{{"integrable", integrable}, {"summary", head}, {"defects", std::move(list)},
               {"verdict", verdict_json(v)}}
              .dump(2)
       << '\n';
    return kOk;
  }
  os << head;
  for (const auto& [ij, f] : defects) {
    std::vector<std::string> comps;
    for (const auto& c : f) comps.push_back(c.to_string());
    os << "; F_" << ij.first << ij.second << " = " << components_text(comps);
  }
  os << '\n';
  return kOk;
}

// ---- diagnose ------------------------------------------------------------

int cmd_diagnose(const Options& o, std::ostream& out, std::ostream& err) {
  const SolutionDocument sol = solution_from_json(read_json_file(o.solution));
  const Ray ray = Ray::parse(o.ray);
  const GrowthProfile profile = degree_profile(sol.phi);
  std::vector<std::string> warnings;

  std::optional<GevreyFit> fit;
  try {
    fit = gevrey_fit(profile);
  } catch (const InsufficientData& e) {
    warnings.push_back(std::string("InsufficientData: ") + e.what());
  }
  std::optional<RadiusEstimate> radius;
  try {
    radius = radius_estimate(sol.phi, ray);
  } catch (const InsufficientData& e) {
    warnings.push_back(std::string("InsufficientData: ") + e.what());
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  Sink sink(o.out, out);
  std::ostream& os = *sink;
  if (o.emit == "csv") {
    write_profile_csv(os, profile);
    return kOk;
  }
  if (o.emit == "json") {
    json prof = json::array();
    json zeros = json::array();
    for (std::size_t i = 0; i < profile.size(); ++i) {
      prof.push_back({{"degree", i + 1}, {"max_abs_coeff", static_cast<double>(profile.max_abs[i])},
                      {"log_max_abs_coeff", profile.zero_degree[i]
                                                ? json(nullptr)
                                                : json(static_cast<double>(profile.log_max[i]))}});
      if (profile.zero_degree[i]) zeros.push_back(i + 1);
    }
    json doc = {{"profile", std::move(prof)}, {"zero_degrees", std::move(zeros)},
                {"degenerate", profile.degenerate()}, {"warnings", warnings}};
    if (fit) {
      doc["fit"] = {{"s", static_cast<double>(fit->s)},        {"logA", static_cast<double>(fit->logA)},
                    {"logC", static_cast<double>(fit->logC)},  {"r2", static_cast<double>(fit->r2)},
                    {"degrees_used", fit->degrees_used},       {"verdict", growth_verdict(*fit)}};
    } else {
      doc["fit"] = nullptr;
    }
    if (radius) {
      doc["radius"] = {{"ray", ray.to_string()}, {"estimate", static_cast<double>(radius->radius)},
                       {"degrees_used", radius->degrees_used}};
    } else {
      doc["radius"] = nullptr;
    }
    os << doc.dump(2) << '\n';
    return kOk;
  }
  os << "profile (degree: max |c_k|)\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    os << "  " << (i + 1) << ": " << format_float(profile.max_abs[i]) << '\n';
  }
  std::vector<int> zeros;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile.zero_degree[i]) zeros.push_back(static_cast<int>(i) + 1);
  }
  if (profile.degenerate()) {
    os << "profile is degenerate (all coefficients zero)\n";
  } else if (!zeros.empty()) {
    os << "zero degrees (excluded from the fit):";
    for (int d : zeros) os << ' ' << d;
    os << '\n';
  }
  if (fit) {
    os << "gevrey fit: s = " << format_float(fit->s) << ", logA = " << format_float(fit->logA)
       << ", logC = " << format_float(fit->logC) << ", r2 = " << format_float(fit->r2) << ", points = "
       << fit->degrees_used.size() << '\n';
    os << "verdict: " << growth_verdict(*fit) << '\n';
  }
  if (radius) {
    os << "radius (" << ray.to_string() << "): " << format_float(radius->radius) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formal power series solutions and convergence criteria for Pfaffian systems", "pfaff"};
  app.require_subcommand(1);
  Options o;

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "truncation order N")->check(CLI::PositiveNumber);
  };
  auto add_emit = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--emit", o.emit, "output format")->check(CLI::IsMember(std::move(formats)));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file"); };

  CLI::App* solve = app.add_subcommand("solve", "compute a truncated formal solution");
  solve->add_option("system", o.system, "system JSON file")->required();
  add_order(solve);
  solve->add_option("--free-policy", o.policy, "zero | fail | value:<file>");
  add_emit(solve, {"text", "json"});
  add_out(solve);

  CLI::App* check = app.add_subcommand("check", "verify a solution and run every convergence criterion");
  check->add_option("system", o.system, "system JSON file")->required();
  check->add_option("solution", o.solution, "solution JSON file")->required();
  check->add_option("--eig-bound", o.eig_bound, "eigenvalue scan bound for Theorems B and 1")
      ->check(CLI::NonNegativeNumber);
  add_emit(check, {"text", "json"});
  add_out(check);

  CLI::App* integ = app.add_subcommand("integrability", "print the defects F_ij and the integrability verdict");
  integ->alias("defect");
  integ->add_option("system", o.system, "system JSON file")->required();
  add_emit(integ, {"text", "json"});
  add_out(integ);

  CLI::App* diag = app.add_subcommand("diagnose", "growth profile, Gevrey fit and radius estimate");
  diag->add_option("solution", o.solution, "solution JSON file")->required();
  diag->add_option("--ray", o.ray, "axis_<i> or diagonal");
  add_emit(diag, {"text", "json", "csv"});
  add_out(diag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (integ->parsed()) return cmd_integrability(o, out);
    if (diag->parsed()) return cmd_diagnose(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidSystem& e) {
    err << "error: invalid system: " << e.what() << '\n';
  } catch (const pfaff::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace pfaff::cli
