#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfaff {

enum class VerdictStatus { Holds, Fails, NotApplicable, InconclusiveAtOrder };

std::string_view to_string(VerdictStatus status);

// Data that lets a reader re-check a Holds or Fails outcome. Which fields are
// populated depends on the theorem.
struct Certificate {
  // Axis / pair / component indices, 1-based.
  std::vector<std::size_t> indices;
  // Re-parseable polynomial or series text (a nonzero monomial, a determinant).
  std::string witness;
  std::optional<std::int64_t> eigenvalue;
  // Degree through which a truncation-relative check was carried out.
  std::optional<int> verified_order;
  std::string detail;
};

struct Verdict {
  std::string theorem;
  VerdictStatus status = VerdictStatus::NotApplicable;
  // Set iff status == InconclusiveAtOrder.
  std::optional<int> order;
  Certificate certificate;
  std::string conclusion;
  std::vector<std::string> notes;

  bool holds() const noexcept { return status == VerdictStatus::Holds; }
};

Verdict make_verdict(std::string theorem, VerdictStatus status, std::string conclusion = {});

// "Theorem 4: Holds [witness ...]" style single line.
std::string summary_line(const Verdict& v);

}  // namespace pfaff
