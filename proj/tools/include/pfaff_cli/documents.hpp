#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfaff/error.hpp"

#include "pfaff/solver.hpp"
#include "pfaff/system.hpp"

namespace pfaff::cli {

// Malformed document content or an unreadable file.
class DocumentError : public pfaff::Error {
 public:
  using Error::Error;
};

// {"m": 2, "n": 1, "p": [1, 1], "f": [["y1 + y1^2"], ["y1 + y1^2"]]}
PfaffianSystem system_from_json(const nlohmann::json& doc);
nlohmann::json system_to_json(const PfaffianSystem& sys);

// A truncated solution phi read back from a document.
struct SolutionDocument {
  std::size_t m = 0;
  std::size_t n = 0;
  int order = 0;
  SeriesVec phi;
};

// {"m": 1, "n": 1, "order": 3, "coefficients": [{"k": [1], "c": ["1"]}, ...]}
SolutionDocument solution_from_json(const nlohmann::json& doc);
nlohmann::json solution_to_json(const SeriesVec& phi);

// Coefficient entries keyed by multi-index, from {"assignments": [...]} or
// {"coefficients": [...]}.
std::map<MultiIndex, std::vector<Rat>> assignments_from_json(const nlohmann::json& doc);

// "zero", "fail" or "value:<file>".
FreePolicy parse_free_policy(const std::string& text);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace pfaff::cli
