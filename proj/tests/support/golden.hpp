#ifndef FPRED_TESTS_GOLDEN_HPP
#define FPRED_TESTS_GOLDEN_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace fpred::golden {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string message;  // empty on pass
};

/// Checks a CLI JSON object against the shape of one subcommand's output:
/// "check", "normalize", "hsubst", "measure", or "error". Returns a
/// description of the first problem, or "" if it conforms.
std::string validate_json(const std::string& schema, const nlohmann::json& j);

/// Runs every case in `dir`/cases.json through the CLI in process, twice,
/// and compares exit code, stdout, stderr fragments and JSON shape. `@DIR@`
/// in arguments expands to `dir`.
std::vector<CaseResult> run_cases(const std::filesystem::path& dir);

}  // namespace fpred::golden

#endif  // FPRED_TESTS_GOLDEN_HPP
