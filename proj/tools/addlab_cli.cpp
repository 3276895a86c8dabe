// addlab command line: construct | verify | scan | oracle.
// Links only the C API; stdout carries the payload, stderr the diagnostics.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "addlab/addlab.h"

namespace {

constexpr int kExitBreak = 0;
constexpr int kExitError = 2;
constexpr int kExitNoBreak = 3;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { addlab_string_free(s); }
};

std::string iso8601_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string envelope(const std::string& command, std::uint64_t seed,
                     const std::string& payload_type, const std::string& payload) {
  std::string out = "{\"toolVersion\":\"";
  out += addlab_version();
  out += "\",\"command\":\"" + command + "\",\"timestamp\":\"" + iso8601_utc_now() +
         "\",\"seed\":" + std::to_string(seed) + ",\"payloadType\":\"" + payload_type +
         "\",\"payload\":" + payload + "}";
  return out;
}

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitError);
}

void check(addlab_status status) {
  if (status != ADDLAB_OK) die(addlab_last_error());
}

// Grid elements are numbers or inclusive "a..b" ranges with step 1.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stod(token));
    } else {
      const double lo = std::stod(token.substr(0, dots));
      const double hi = std::stod(token.substr(dots + 2));
      for (double v = lo; v <= hi + 1e-9; v += 1.0) out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty grid: " + text);
  return out;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream file(output_path);
    if (!file) die("cannot open output file: " + output_path);
    file << text << "\n";
  }
}

struct OracleFlags {
  addlab_oracle_config cfg{};
  void attach(CLI::App* cmd) {
    addlab_oracle_config_defaults(&cfg);
    cmd->add_option("--restarts", cfg.restarts, "independent random restarts")
        ->capture_default_str();
    cmd->add_option("--max-iters", cfg.max_iterations, "iteration cap per restart")
        ->capture_default_str();
    cmd->add_option("--tol", cfg.tolerance, "relative-change stopping tolerance")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "random seed")->envname("ADDLAB_SEED");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for additivity-breaking constructions of minimum "
               "output Renyi entropy"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a subspace and summarize it");
  std::string c_family;
  int c_d = 0, c_n = 0;
  OracleFlags c_oracle;
  construct
      ->add_option("--family", c_family,
                   "antisym | antisym-subspace | bell-extension | parthasarathy")
      ->required();
  construct->add_option("--d", c_d, "local dimension")->required();
  construct->add_option("--n", c_n, "size parameter (subspace dim / Bell count)");
  c_oracle.attach(construct);

  auto* verify = app.add_subcommand("verify", "full witness report; exit 0 breaks, 3 no break");
  std::string v_family;
  int v_d = 0, v_n = 0;
  double v_p = 0.0, v_m = 0.5;
  OracleFlags v_oracle;
  verify->add_option("--family", v_family)->required();
  verify->add_option("--d", v_d)->required();
  verify->add_option("--n", v_n);
  verify->add_option("--p", v_p, "Renyi order, p > 1")->required();
  verify->add_option("--m", v_m, "assumed M_d lower bound (parthasarathy)")
      ->capture_default_str();
  v_oracle.attach(verify);

  auto* scan = app.add_subcommand("scan", "region scan over a (p, d) grid");
  std::string s_family, s_pgrid, s_dgrid, s_format = "csv", s_output;
  double s_m = 0.5;
  scan->add_option("--family", s_family)->required();
  scan->add_option("--p-grid", s_pgrid, "e.g. 2.5,3,4")->required();
  scan->add_option("--d-grid", s_dgrid, "e.g. 4..12")->required();
  scan->add_option("--m", s_m, "assumed M_d lower bound (parthasarathy)")
      ->capture_default_str();
  scan->add_option("--format", s_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scan->add_option("--output,-o", s_output, "write payload to a file instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "run a named numerical oracle");
  std::string o_target;
  int o_d = 0, o_n = 0;
  OracleFlags o_oracle;
  oracle->add_option("--target", o_target, "antisym-sup | subspace-sup | md")->required();
  oracle->add_option("--d", o_d)->required();
  oracle->add_option("--n", o_n, "subspace dimension (subspace-sup)");
  o_oracle.attach(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (construct->parsed()) {
    addlab_subspace* handle = nullptr;
    check(addlab_subspace_create(c_family.c_str(), c_d, c_n, &handle));
    std::unique_ptr<addlab_subspace, decltype(&addlab_subspace_free)> guard(
        handle, &addlab_subspace_free);
    StringGuard json;
    check(addlab_construct_json(handle, &c_oracle.cfg, &json.s));
    std::cout << envelope("construct", c_oracle.cfg.seed, "construct-summary", json.s) << "\n";
    return 0;
  }

  if (verify->parsed()) {
    StringGuard json;
    int32_t breaks = 0;
    check(addlab_verify_json(v_family.c_str(), v_d, v_n, v_p, v_m, &v_oracle.cfg, &breaks,
                             &json.s));
    std::cout << envelope("verify", v_oracle.cfg.seed, "witness-report", json.s) << "\n";
    return breaks ? kExitBreak : kExitNoBreak;
  }

  if (scan->parsed()) {
    std::vector<double> ps, ds_raw;
    try {
      ps = parse_grid(s_pgrid);
      ds_raw = parse_grid(s_dgrid);
    } catch (const std::exception& e) {
      die(e.what());
    }
    std::vector<int32_t> ds(ds_raw.begin(), ds_raw.end());
    StringGuard payload;
    if (s_format == "csv") {
      check(addlab_scan_csv(s_family.c_str(), ps.data(), int32_t(ps.size()), ds.data(),
                            int32_t(ds.size()), s_m, &payload.s));
      emit(payload.s, s_output);
    } else {
      check(addlab_scan_json(s_family.c_str(), ps.data(), int32_t(ps.size()), ds.data(),
                             int32_t(ds.size()), s_m, &payload.s));
      emit(envelope("scan", 0, "region-scan", payload.s), s_output);
    }
    return 0;
  }

  if (oracle->parsed()) {
    StringGuard json;
    check(addlab_oracle_json(o_target.c_str(), o_d, o_n, &o_oracle.cfg, &json.s));
    std::cout << envelope("oracle", o_oracle.cfg.seed, "oracle-estimate", json.s) << "\n";
    return 0;
  }

  return kExitError;
}
