#include "flopwall/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "flopwall/errors.hpp"

namespace flopwall::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "error";
  }
}

bool Report::all_pass() const {
  for (const auto& c : cases)
    if (c.status != Status::pass) return false;
  return true;
}

int Report::exit_code() const { return all_pass() ? 0 : 1; }

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw ConfigError("unknown format '" + s + "'");
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string params_inline(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

void emit_json(const Report& rep, std::ostream& out) {
  // Keys in lexicographic order at every level.
  out << "{\n  \"cases\": [";
  for (std::size_t i = 0; i < rep.cases.size(); ++i) {
    const auto& c = rep.cases[i];
    out << (i ? ",\n" : "\n") << "    {";
    out << "\"max_rel_err\": " << json_number(c.max_rel_err);
    if (!c.message.empty()) out << ", \"message\": " << json_string(c.message);
    out << ", \"name\": " << json_string(c.name) << ", \"params\": {";
    bool first = true;
    for (const auto& [k, v] : c.params) {
      out << (first ? "" : ", ") << json_string(k) << ": " << json_string(v);
      first = false;
    }
    out << "}";
    if (rep.timings) out << ", \"runtime_ms\": " << json_number(c.runtime_ms);
    out << ", \"status\": " << json_string(to_string(c.status));
    out << ", \"suite\": " << json_string(c.suite) << "}";
  }
  out << (rep.cases.empty() ? "]" : "\n  ]");
  out << ",\n  \"config\": " << (rep.config_echo.empty() ? "{}" : rep.config_echo);
  out << ",\n  \"schema_version\": 1";
  out << ",\n  \"seed\": " << rep.seed;
  out << ",\n  \"status\": " << json_string(rep.all_pass() ? "pass" : "fail");
  out << ",\n  \"version\": " << json_string(rep.version) << "\n}\n";
}

void emit_csv(const Report& rep, std::ostream& out) {
  out << "suite,name,params,status,max_rel_err";
  if (rep.timings) out << ",runtime_ms";
  out << ",message\n";
  for (const auto& c : rep.cases) {
    out << csv_field(c.suite) << ',' << csv_field(c.name) << ',' << csv_field(params_inline(c.params)) << ','
        << to_string(c.status) << ',' << json_number(c.max_rel_err);
    if (rep.timings) out << ',' << json_number(c.runtime_ms);
    out << ',' << csv_field(c.message) << '\n';
  }
}

void emit_text(const Report& rep, std::ostream& out) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;  // suite -> (passed, total)
  for (const auto& c : rep.cases) {
    if (!tally.count(c.suite)) order.push_back(c.suite);
    auto& t = tally[c.suite];
    t.second++;
    if (c.status == Status::pass) t.first++;
  }
  for (const auto& c : rep.cases) {
    if (c.status == Status::pass) continue;
    out << "  " << to_string(c.status) << "  " << c.suite << "/" << c.name;
    if (!c.params.empty()) out << " [" << params_inline(c.params) << "]";
    out << "  max_rel_err=" << json_number(c.max_rel_err);
    if (!c.message.empty()) out << "  " << c.message;
    out << '\n';
  }
  for (const auto& s : order) {
    auto [pass, total] = tally[s];
    out << (pass == total ? "PASS " : "FAIL ") << s << " (" << pass << "/" << total << ")\n";
  }
}

}  // namespace

void emit(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: emit_json(report, out); break;
    case Format::csv: emit_csv(report, out); break;
    case Format::text: emit_text(report, out); break;
  }
}

void emit(const Report& report, Format format, const std::string& path) {
  if (path.empty() || path == "-") {
    emit(report, format, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  emit(report, format, f);
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace flopwall::cli
