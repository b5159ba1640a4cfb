#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace flopwall::cli {

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct CaseResult {
  std::string suite;
  std::string name;
  std::map<std::string, std::string> params;
  Status status = Status::error;
  double max_rel_err = 0.0;
  double runtime_ms = 0.0;
  std::string message;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::string config_echo;  ///< already-serialized JSON object
  std::vector<CaseResult> cases;
  bool timings = false;     ///< runtime_ms is emitted only when set

  bool all_pass() const;
  /// 0 when every case passed, 1 otherwise.
  int exit_code() const;
};

enum class Format { json, csv, text };
/// Throws ConfigError for anything but json, csv, text.
Format parse_format(const std::string& s);

void emit(const Report& report, Format format, std::ostream& out);
/// Writes to a file, or stdout when path is empty or "-". Throws IoError.
void emit(const Report& report, Format format, const std::string& path);

/// 17 significant digits; non-finite values become null.
std::string json_number(double v);
std::string json_string(const std::string& s);

}  // namespace flopwall::cli
