#include "flopwall/run_config.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "flopwall/errors.hpp"
#include "flopwall/report.hpp"
#include "json.hpp"

namespace flopwall::cli {

using nlohmann::json;

double default_tolerance(const std::string& suite_name) {
  static const std::map<std::string, double> defaults = {
      {"identities", 1e-10},  {"geometry", 0.0},        {"ktheory", 1e-10},
      {"wallcross", 1e-8},    {"continuation", 1e-8},   {"central-charge", 1e-6},
      {"hypergeom", 1e-10},
  };
  auto it = defaults.find(suite_name);
  return it == defaults.end() ? 1e-10 : it->second;
}

double RunConfig::tolerance(const std::string& suite_name) const {
  auto it = tol.find(suite_name);
  return it == tol.end() ? default_tolerance(suite_name) : it->second;
}

FlopConfig random_config(int n, int r, std::uint64_t seed, const Rational& scale) {
  if (n < 2 || r < 1 || r >= n) throw ConfigError("need 1 <= r < n");
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    long p = static_cast<long>(rng() % 101) - 50;
    long q = static_cast<long>(rng() % 50) + 1;
    return Rational(p, q) * scale;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Rational> x(n), z(n);
    for (auto& v : x) v = draw();
    for (auto& v : z) v = draw();
    try {
      return FlopConfig(n, r, x, z);
    } catch (const ConfigError&) {
    }
  }
  throw ConfigError("no generic weights found for this seed");
}

FlopConfig RunConfig::flop_config() const {
  if (x.has_value() != z.has_value()) throw ConfigError("weights: give both x and z");
  if (x) return FlopConfig(n, r, *x, *z);
  return random_config(n, r, seed, scale);
}

std::string RunConfig::echo_json() const {
  std::ostringstream o;
  auto list = [&](const std::vector<Rational>& v) {
    o << "[";
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << json_string(v[i].str());
    o << "]";
  };
  o << "{\"n\": " << n << ", \"order\": " << order;
  o << ", \"path\": {\"q_in\": " << json_number(path.q_in) << ", \"q_out\": " << json_number(path.q_out)
    << ", \"re_max\": " << json_number(path.re_max) << ", \"samples\": " << path.samples << "}";
  o << ", \"r\": " << r << ", \"suite\": " << json_string(suite) << ", \"tol\": {";
  bool first = true;
  for (const auto& [k, v] : tol) {
    o << (first ? "" : ", ") << json_string(k) << ": " << json_number(v);
    first = false;
  }
  o << "}, \"weights\": ";
  if (x) {
    o << "{\"x\": ";
    list(*x);
    o << ", \"z\": ";
    list(*z);
    o << "}";
  } else {
    o << "{\"scale\": " << json_string(scale.str()) << ", \"seed\": " << seed << "}";
  }
  o << ", \"z_eval\": [" << json_number(z_eval.real()) << ", " << json_number(z_eval.imag()) << "]}";
  return o.str();
}

namespace {

Rational parse_rational(const json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError(what + ": expected a rational string such as \"3/7\"");
}

std::vector<Rational> parse_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + ": expected an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(parse_rational(e, what));
  return out;
}

Complex parse_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(what + ": expected [re, im]");
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ConfigError(where + ": unknown key '" + it.key() + "'");
  }
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j, {"schema_version", "n", "r", "weights", "z_eval", "order", "tol", "path", "suite", "workers"},
                 "config");
  RunConfig rc;
  try {
    if (j.contains("schema_version") && j["schema_version"].get<int>() != kConfigSchemaVersion)
      throw ConfigError("unsupported schema_version");
    if (j.contains("n")) rc.n = j["n"].get<int>();
    if (j.contains("r")) rc.r = j["r"].get<int>();
    if (j.contains("weights")) {
      const json& w = j["weights"];
      if (!w.is_object()) throw ConfigError("weights: expected an object");
      reject_unknown(w, {"x", "z", "seed", "scale"}, "weights");
      if (w.contains("x")) rc.x = parse_list(w["x"], "weights.x");
      if (w.contains("z")) rc.z = parse_list(w["z"], "weights.z");
      if (w.contains("seed")) rc.seed = w["seed"].get<std::uint64_t>();
      if (w.contains("scale")) rc.scale = parse_rational(w["scale"], "weights.scale");
    }
    if (j.contains("z_eval")) rc.z_eval = parse_complex(j["z_eval"], "z_eval");
    if (j.contains("order")) rc.order = j["order"].get<int>();
    if (j.contains("tol")) {
      if (!j["tol"].is_object()) throw ConfigError("tol: expected an object");
      for (auto it = j["tol"].begin(); it != j["tol"].end(); ++it) rc.tol[it.key()] = it.value().get<double>();
    }
    if (j.contains("path")) {
      const json& p = j["path"];
      reject_unknown(p, {"q_in", "q_out", "re_max", "samples"}, "path");
      if (p.contains("q_in")) rc.path.q_in = p["q_in"].get<double>();
      if (p.contains("q_out")) rc.path.q_out = p["q_out"].get<double>();
      if (p.contains("re_max")) rc.path.re_max = p["re_max"].get<double>();
      if (p.contains("samples")) rc.path.samples = p["samples"].get<int>();
    }
    if (j.contains("suite")) rc.suite = j["suite"].get<std::string>();
    if (j.contains("workers")) rc.workers = j["workers"].get<unsigned>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (rc.order < 0) throw ConfigError("order must be non-negative");
  if (rc.z_eval == Complex(0.0)) throw ConfigError("z_eval must be nonzero");
  if (!(rc.path.q_in > 0 && rc.path.q_in < 1 && rc.path.q_out > 1)) throw ConfigError("path: need 0 < q_in < 1 < q_out");
  if (rc.x && static_cast<int>(rc.x->size()) != rc.n) throw ConfigError("weights.x must have n entries");
  if (rc.z && static_cast<int>(rc.z->size()) != rc.n) throw ConfigError("weights.z must have n entries");
  rc.flop_config();  // genericity
  return rc;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_run_config(ss.str());
}

}  // namespace flopwall::cli
