#include "cyspec/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include "json.hpp"
#include <sstream>

#include "cyspec/errors.hpp"

namespace cyspec {

std::string content_digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  out << "sha256:";
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

RunReport run_model(const std::string& path, const std::string& bytes, const RunOptions& opts) {
  RunReport r;
  r.model_path = path;
  r.input_digest = content_digest(bytes);
  FibrationModel m;
  try {
    m = parse_model(bytes);
  } catch (const Error& e) {
    r.error = e.what();
    return r;
  }
  r.validation = validate(m, opts.milnor);
  if (has_errors(r.validation)) return r;
  try {
    r.spectrum = full_spectrum(m, opts.milnor);
    r.anomaly = anomaly_report(m, *r.spectrum);
    r.bounds = run_all(m, *r.spectrum, opts.mirror_elliptic_with_section);
  } catch (const MilnorInconclusiveError& e) {
    r.validation.push_back({"milnor-inconclusive", Severity::error, "/singularities", e.what()});
    r.spectrum.reset();
    r.anomaly.reset();
  } catch (const Error& e) {
    r.validation.push_back({"evaluation", Severity::error, "/", e.what()});
    r.spectrum.reset();
    r.anomaly.reset();
  }
  return r;
}

RunReport run_file(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RunReport r;
    r.model_path = path;
    r.error = "cannot read " + path;
    return r;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_model(path, ss.str(), opts);
}

namespace {

int validation_code(const RunReport& r, bool strict) {
  if (r.error) return exit_code::invalid;
  int code = exit_code::ok;
  for (const auto& v : r.validation) {
    if (v.severity == Severity::warning && !strict) continue;
    code = std::max(code, v.rule == "milnor-inconclusive" ? exit_code::milnor_inconclusive : exit_code::invalid);
  }
  return code;
}

int anomaly_code(const RunReport& r, const RunOptions& opts) {
  if (!r.anomaly) return exit_code::ok;
  const auto& a = *r.anomaly;
  bool bad = false;
  const Rational alt = a.grav_residual_alt.value_or(a.grav_residual);
  if (opts.convention != Convention::b) bad |= a.grav_residual != 0;
  if (opts.convention != Convention::a) bad |= alt != 0;
  if (a.geom_residual) bad |= *a.geom_residual != 0;
  if (opts.strict && r.spectrum && !r.spectrum->warnings.empty()) bad = true;
  return bad ? exit_code::anomaly : exit_code::ok;
}

int bound_code(const RunReport& r, bool strict) {
  for (const auto& b : r.bounds)
    if (b.status == BoundStatus::violated || (strict && b.status == BoundStatus::warning)) return exit_code::bound;
  return exit_code::ok;
}

}  // namespace

int check_exit_code(const RunReport& r, const RunOptions& opts) {
  return std::max({validation_code(r, opts.strict), anomaly_code(r, opts), bound_code(r, opts.strict)});
}

int spectrum_exit_code(const RunReport& r) { return validation_code(r, false); }

int bounds_exit_code(const RunReport& r, const RunOptions& opts) {
  return std::max(validation_code(r, opts.strict), bound_code(r, opts.strict));
}

nlohmann::json to_json(const Violation& v) {
  return {{"rule", v.rule}, {"severity", to_string(v.severity)}, {"location", v.location}, {"message", v.message}};
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["model_path"] = r.model_path;
  j["tool_version"] = r.tool_version;
  j["input_digest"] = r.input_digest;
  j["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr);
  j["validation"] = nlohmann::json::array();
  for (const auto& v : r.validation) j["validation"].push_back(to_json(v));
  j["spectrum"] = r.spectrum ? to_json(*r.spectrum) : nlohmann::json(nullptr);
  j["anomaly"] = r.anomaly ? to_json(*r.anomaly) : nlohmann::json(nullptr);
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : r.bounds) j["bounds"].push_back(to_json(b));
  return j;
}

std::string render_text(const RunReport& r, const RunOptions& opts) {
  std::ostringstream out;
  out << r.model_path << "\n";
  if (r.error) {
    out << "  error: " << *r.error << "\n";
    return out.str();
  }
  for (const auto& v : r.validation)
    out << "  " << to_string(v.severity) << " [" << v.rule << "] " << v.location << ": " << v.message << "\n";
  if (r.spectrum) {
    const auto& s = *r.spectrum;
    out << "  regime " << to_string(s.regime) << "\n";
    out << "  V = " << s.V << "  T = " << s.T_base;
    if (s.T_extra) out << " (+" << s.T_extra << ")";
    out << "  H = " << to_string(s.H_unch_base + s.H_ch) << "  (H_unch = " << to_string(s.H_unch_base);
    if (s.H_unch_extra) out << " (+" << s.H_unch_extra << ")";
    out << ", H_ch = " << to_string(s.H_ch) << ")\n";
    for (const auto& b : s.breakdown) out << "    " << b.source << " " << b.term << " " << to_string(b.value) << "\n";
    for (const auto& w : s.warnings) out << "  warning: " << w << "\n";
  }
  if (r.anomaly) {
    const auto& a = *r.anomaly;
    if (opts.convention != Convention::b || !a.grav_residual_alt)
      out << "  gravitational residual" << (a.grav_residual_alt ? " (a)" : "") << " = " << to_string(a.grav_residual) << "\n";
    if (a.grav_residual_alt && opts.convention != Convention::a)
      out << "  gravitational residual (b) = " << to_string(*a.grav_residual_alt) << "\n";
    if (a.geom_residual) out << "  geometric residual = " << to_string(*a.geom_residual) << "\n";
    else out << "  geometric residual: chi_top not supplied\n";
  }
  for (const auto& b : r.bounds) {
    out << "  bound " << b.rule << ": " << to_string(b.status);
    if (!b.relation.empty()) out << " (" << b.lhs << " " << b.relation << " " << b.rhs << ")";
    out << " [" << to_string(b.provenance) << "]";
    if (!b.note.empty()) out << " " << b.note;
    out << "\n";
  }
  return out.str();
}

}  // namespace cyspec
