#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyspec/anomaly.hpp"
#include "cyspec/bounds.hpp"
#include "cyspec/model.hpp"
#include "cyspec/spectrum.hpp"

namespace cyspec {

inline constexpr const char* kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 1;
inline constexpr int anomaly = 2;
inline constexpr int bound = 3;
inline constexpr int milnor_inconclusive = 4;
}  // namespace exit_code

struct RunOptions {
  MilnorOptions milnor;
  Convention convention = Convention::a;
  bool mirror_elliptic_with_section = false;
  bool strict = false;
};

struct RunReport {
  std::string model_path;
  std::optional<std::string> error;  // parse failure
  std::vector<Violation> validation;
  std::optional<SpectrumReport> spectrum;
  std::optional<AnomalyReport> anomaly;
  std::vector<BoundVerdict> bounds;
  std::string tool_version = kToolVersion;
  std::string input_digest;
};

/// "sha256:<hex>" of the bytes.
std::string content_digest(const std::string& bytes);

/// Parse, validate and, if valid, evaluate everything. Never throws for model
/// problems; they end up in `error` or `validation`.
RunReport run_model(const std::string& path, const std::string& bytes, const RunOptions& opts);
RunReport run_file(const std::string& path, const RunOptions& opts);

/// Exit status of the check command for this report.
int check_exit_code(const RunReport& r, const RunOptions& opts);
/// Exit status of the spectrum command: only parse/validation problems count.
int spectrum_exit_code(const RunReport& r);
/// Exit status of the bounds command.
int bounds_exit_code(const RunReport& r, const RunOptions& opts);

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const RunReport& r);

/// Plain-text rendering for terminals.
std::string render_text(const RunReport& r, const RunOptions& opts);

}  // namespace cyspec
