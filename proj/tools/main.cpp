// flopwall: command-line front end for the verification suites.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flopwall/barnes.hpp"
#include "flopwall/errors.hpp"
#include "flopwall/geometry.hpp"
#include "flopwall/ifunction.hpp"
#include "flopwall/kclass.hpp"
#include "flopwall/report.hpp"
#include "flopwall/run_config.hpp"
#include "flopwall/series.hpp"
#include "flopwall/suites.hpp"
#include "flopwall/transfer.hpp"

namespace {

using namespace flopwall;
using cli::json_number;
using cli::json_string;
using flopgeom::FlopConfig;
using flopgeom::Side;
using numkernel::Complex;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string complex_json(Complex v) { return "[" + json_number(v.real()) + ", " + json_number(v.imag()) + "]"; }

Complex parse_complex(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("expected RE,IM but got '" + s + "'");
  }
}

// 1-based comma list to sorted 0-based indices.
std::vector<int> parse_delta(const std::string& s, int n) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1 || v > n) throw ConfigError("");
      out.push_back(v - 1);
    } catch (const std::exception&) {
      throw ConfigError("bad index '" + tok + "' in '" + s + "'");
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConfigError("repeated index in '" + s + "'");
  return out;
}

FlopConfig load_flop(const std::string& path) {
  return path.empty() ? cli::RunConfig{}.flop_config() : cli::load_run_config(path).flop_config();
}

Side parse_side(const std::string& s) {
  if (s == "+" || s == "plus") return Side::plus;
  if (s == "-" || s == "minus") return Side::minus;
  throw ConfigError("side must be + or -");
}

std::string weight_json(const flopgeom::Weight& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + std::to_string(w[i]);
  return out + "]";
}

std::string character_json(const ktheory::VirtualCharacter& c) {
  std::string out = "[";
  bool first = true;
  for (const auto& [w, k] : c.terms()) {
    out += (first ? "[" : ", [") + std::to_string(k) + ", " + weight_json(w) + "]";
    first = false;
  }
  return out + "]";
}

// Class syntax: terms joined by '+', each "[k*]1" or "[k*]e<i,j,...>" with 1-based minus-side indices.
ktheory::LocalizedKClass parse_class(const std::string& class_text, const FlopConfig& cfg) {
  auto total = ktheory::zero_class(cfg, Side::minus);
  std::stringstream ss(class_text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    long k = 1;
    auto star = term.find('*');
    try {
      if (star != std::string::npos) {
        k = std::stol(term.substr(0, star));
        term = term.substr(star + 1);
      }
    } catch (const std::exception&) {
      throw ConfigError("bad coefficient in class term '" + term + "'");
    }
    ktheory::LocalizedKClass t = ktheory::trivial_class(cfg, Side::minus);
    if (term == "1") {
    } else if (!term.empty() && term[0] == 'e') {
      auto delta = parse_delta(term.substr(1), cfg.n());
      if (static_cast<int>(delta.size()) != cfg.r()) throw ConfigError("generator needs r indices: '" + term + "'");
      t = ktheory::generator_e(cfg, {Side::minus, delta});
    } else {
      throw ConfigError("bad class term '" + term + "'");
    }
    t *= k;
    total += t;
  }
  return total;
}

int cmd_verify(const std::string& suite, const std::string& config_path, const std::string& out,
               const std::string& format, bool timings, unsigned workers) {
  cli::RunConfig rc = config_path.empty() ? cli::RunConfig{} : cli::load_run_config(config_path);
  if (workers) rc.workers = workers;
  const std::string s = suite.empty() ? rc.suite : suite;
  auto rep = cli::run_suite(rc, s, timings);
  cli::emit(rep, cli::parse_format(format), out);
  if (!out.empty() && out != "-") cli::emit(rep, cli::Format::text, std::string("-"));
  return rep.exit_code();
}

int cmd_fixed_points(const std::string& config_path) {
  auto cfg = load_flop(config_path);
  std::cout << "{\"n\": " << cfg.n() << ", \"r\": " << cfg.r() << ", \"dim\": " << cfg.dim() << ", \"sides\": {";
  bool first_side = true;
  for (Side side : {Side::minus, Side::plus}) {
    std::cout << (first_side ? "" : ", ") << json_string(flopgeom::to_string(side)) << ": [";
    first_side = false;
    bool first = true;
    for (const auto& l : flopgeom::enumerate_fixed_points(cfg, side)) {
      auto g = flopgeom::fixed_point_geometry(cfg, l);
      std::cout << (first ? "\n  " : ",\n  ") << "{\"delta\": " << json_string(l.str())
                << ", \"euler_normal\": " << json_string(g.euler_normal.str()) << ", \"tangent_weights\": [";
      for (std::size_t i = 0; i < g.tangent_weights.size(); ++i)
        std::cout << (i ? ", " : "") << weight_json(g.tangent_weights[i]);
      std::cout << "]}";
      first = false;
    }
    std::cout << "]";
  }
  std::cout << "}}\n";
  return kExitPass;
}

int cmd_fm(const std::string& delta_s, const std::string& config_path) {
  auto cfg = load_flop(config_path);
  auto delta = parse_delta(delta_s, cfg.n());
  if (static_cast<int>(delta.size()) != cfg.r()) throw ConfigError("--delta needs exactly r indices");
  flopgeom::FixedPointLabel dm{Side::minus, delta};
  auto img = ktheory::fm_transform(cfg, ktheory::generator_e(cfg, dm));
  auto formula = ktheory::fm_generator_formula(cfg, dm);
  auto labels = flopgeom::enumerate_fixed_points(cfg, Side::plus);
  std::cout << "{\"class\": " << json_string("e" + dm.str()) << ", \"exact\": " << (img.exact() ? "true" : "false")
            << ", \"matches_formula\": "
            << (img.exact() && *img.exact() == formula ? "true" : "false") << ", \"restrictions\": [";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::cout << (i ? ",\n  " : "\n  ") << "{\"fixed_point\": " << json_string(labels[i].str());
    if (img.exact()) std::cout << ", \"terms\": " << character_json(img.exact()->at(i));
    std::cout << ", \"value\": " << complex_json(img.restriction(i, cfg.point())) << "}";
  }
  std::cout << "]}\n";
  return img.exact() && !(*img.exact() == formula) ? kExitFail : kExitPass;
}

int cmd_uh_matrix(const std::string& kind_s, const std::string& config_path) {
  auto cfg = load_flop(config_path);
  using K = wallcross::TransitionMatrix::Kind;
  K kind = kind_s == "C" ? K::C : kind_s == "CK" ? K::CK : kind_s == "CH" ? K::CH : throw ConfigError("kind must be C, CK or CH");
  auto m = wallcross::transition_matrix(cfg, kind);
  std::cout << "{\"cols\": [";
  for (std::size_t j = 0; j < m.cols.size(); ++j) std::cout << (j ? ", " : "") << json_string(m.cols[j]);
  std::cout << "], \"entries\": [";
  bool first = true;
  for (const auto& row : m.entries)
    for (Complex v : row) {
      std::cout << (first ? "" : ", ") << complex_json(v);
      first = false;
    }
  std::cout << "], \"kind\": " << json_string(wallcross::to_string(m.kind)) << ", \"rows\": [";
  for (std::size_t i = 0; i < m.rows.size(); ++i) std::cout << (i ? ", " : "") << json_string(m.rows[i]);
  std::cout << "]}\n";
  return kExitPass;
}

int cmd_series(const std::string& side_s, const std::string& delta_s, int order, const std::string& config_path) {
  auto cfg = load_flop(config_path);
  Side side = parse_side(side_s);
  auto delta = parse_delta(delta_s, cfg.n());
  if (static_cast<int>(delta.size()) != cfg.r()) throw ConfigError("--delta needs exactly r indices");
  if (order < 0) throw ConfigError("--order must be non-negative");
  auto h = hypergeom::h_series(cfg, side, delta, order, cfg.point());
  auto s = h.specialize();
  std::cout << "{\"coeffs\": [";
  for (const auto& [e, c] : s.coeffs) {
    Complex v = c * h.prefactor;
    std::cout << (e ? ", " : "") << "[" << e << ", " << json_number(v.real()) << ", " << json_number(v.imag()) << "]";
  }
  std::cout << "], \"offset\": " << complex_json(s.offset) << ", \"order\": " << s.order << "}\n";
  return kExitPass;
}

int cmd_barnes(const std::string& w_s, int l, const std::string& config_path) {
  auto cfg = load_flop(config_path);
  Complex w = parse_complex(w_s);
  const int m = cfg.n() - cfg.r();
  std::ostringstream o;  // nothing is printed unless every value converges
  o << "{\"phase\": " << m << ", \"w\": " << complex_json(w) << ", \"values\": [";
  bool first = true;
  for (int k = 0; k < cfg.n(); ++k) {
    if (l > 0 && k != l - 1) continue;
    auto res = hypergeom::barnes_integrate(w, cfg, k, cfg.point(), m);
    o << (first ? "\n  " : ",\n  ") << "{\"error_estimate\": " << json_number(res.error_estimate)
              << ", \"height\": " << json_number(res.height) << ", \"l\": " << k + 1
              << ", \"residue_correction\": " << complex_json(res.residue_correction)
              << ", \"sigma\": " << json_number(res.sigma) << ", \"value\": " << complex_json(res.value) << "}";
    first = false;
  }
  o << "]}\n";
  std::cout << o.str();
  return kExitPass;
}

int cmd_charge(const std::string& class_text, const std::string& w_s, const std::string& z_s, int order,
               const std::string& config_path) {
  auto cfg = load_flop(config_path);
  Complex w = parse_complex(w_s), z = parse_complex(z_s);
  if (z == 0.0) throw ConfigError("--z must be nonzero");
  auto e = parse_class(class_text, cfg);
  Complex minus = hypergeom::central_charge(cfg, Side::minus, e, -w, z, order);
  std::ostringstream o;
  o << "{\"class\": " << json_string(class_text) << ", \"minus_series\": " << complex_json(minus);
  int code = kExitPass;
  if (cfg.r() == 1) {
    Complex plus = hypergeom::central_charge_continued(cfg, ktheory::fm_transform(cfg, e), w, z);
    double err = std::abs(plus - minus) / std::max(std::abs(minus), 1e-300);
    o << ", \"plus_continued\": " << complex_json(plus) << ", \"rel_err\": " << json_number(err);
    if (!(err < 1e-6)) code = kExitFail;
  }
  o << ", \"w\": " << complex_json(w) << ", \"z\": " << complex_json(z) << "}\n";
  std::cout << o.str();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant wall-crossing checks for Grassmann flops"};
  app.require_subcommand(1);
  app.set_version_flag("--version", flopwall::cli::kVersion);

  std::string config_path, out, format = "json", suite, delta, side, w = "0,0", z = "2,0", cls, kind = "C";
  int order = 20, l = 0;
  unsigned workers = 0;
  bool timings = false;

  auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a report");
  verify->add_option("--suite", suite, "identities|geometry|ktheory|wallcross|continuation|central-charge|all|acceptance")
      ->check(CLI::IsMember(flopwall::cli::suite_names()));
  verify->add_option("--config", config_path, "JSON run configuration");
  verify->add_option("--out", out, "Report destination (default stdout)");
  verify->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--workers", workers, "Worker threads (0: all cores)");
  verify->add_flag("--timings", timings, "Include runtime_ms in the report");

  auto* fixed = app.add_subcommand("fixed-points", "List fixed points with tangent weights");
  fixed->add_option("--config", config_path);

  auto* fm = app.add_subcommand("fm", "Fourier-Mukai image of a generator e_delta");
  fm->add_option("--delta", delta, "1-based indices, e.g. 1,3")->required();
  fm->add_option("--config", config_path);

  auto* uh = app.add_subcommand("uh-matrix", "Transfer coefficients C, C^K or C^H");
  uh->add_option("--kind", kind)->check(CLI::IsMember({"C", "CK", "CH"}));
  uh->add_option("--config", config_path);

  auto* series = app.add_subcommand("series", "H-series restriction at a fixed point");
  series->add_option("--side", side, "+ or -")->required();
  series->add_option("--delta", delta)->required();
  series->add_option("--order", order);
  series->add_option("--config", config_path);

  auto* barnes = app.add_subcommand("barnes", "Mellin-Barnes value of the plus series");
  barnes->add_option("--w", w, "RE,IM")->required();
  barnes->add_option("--l", l, "Fixed point (1-based); all when omitted");
  barnes->add_option("--config", config_path);

  auto* charge = app.add_subcommand("charge", "Central charge of a minus-side class");
  charge->add_option("--class", cls, "e.g. 1, e1, 2*e1+e2")->required();
  charge->add_option("--w", w, "RE,IM (plus-side coordinate)")->required();
  charge->add_option("--z", z, "RE,IM");
  charge->add_option("--order", order);
  charge->add_option("--config", config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(suite, config_path, out, format, timings, workers);
    if (*fixed) return cmd_fixed_points(config_path);
    if (*fm) return cmd_fm(delta, config_path);
    if (*uh) return cmd_uh_matrix(kind, config_path);
    if (*series) return cmd_series(side, delta, order, config_path);
    if (*barnes) return cmd_barnes(w, l, config_path);
    if (*charge) return cmd_charge(cls, w, z, std::max(order, 80), config_path);
  } catch (const flopwall::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const flopwall::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const flopwall::DegenerateWeight& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitConfig;
}
