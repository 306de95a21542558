#include "pfaff/verdict.hpp"

namespace pfaff {

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds:
      return "Holds";
    case VerdictStatus::Fails:
      return "Fails";
    case VerdictStatus::NotApplicable:
      return "NotApplicable";
    case VerdictStatus::InconclusiveAtOrder:
      return "InconclusiveAtOrder";
  }
  return "?";
}

Verdict make_verdict(std::string theorem, VerdictStatus status, std::string conclusion) {
  Verdict v;
  v.theorem = std::move(theorem);
  v.status = status;
  v.conclusion = std::move(conclusion);
  return v;
}

std::string summary_line(const Verdict& v) {
  std::string s = v.theorem + ": " + std::string(to_string(v.status));
  if (v.order) s += "(" + std::to_string(*v.order) + ")";
  const Certificate& c = v.certificate;
  if (!c.indices.empty()) {
    s += " indices=(";
    for (std::size_t i = 0; i < c.indices.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c.indices[i]);
    }
    s += ")";
  }
  if (c.eigenvalue) s += " eigenvalue=" + std::to_string(*c.eigenvalue);
  if (!c.witness.empty()) s += " witness=" + c.witness;
  if (c.verified_order) s += " verified-through=" + std::to_string(*c.verified_order);
  if (!c.detail.empty()) s += " [" + c.detail + "]";
  if (!v.conclusion.empty()) s += " => " + v.conclusion;
  return s;
}

}  // namespace pfaff
