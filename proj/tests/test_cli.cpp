// End-to-end checks of the installed command line through popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

#ifndef ADDLAB_CLI_PATH
#error "ADDLAB_CLI_PATH must point at the addlab binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(ADDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

json payload_of(const RunResult& r) {
  const json envelope = json::parse(r.out);
  CHECK(envelope["toolVersion"] == "0.1.0");
  CHECK(envelope.contains("timestamp"));
  CHECK(envelope.contains("seed"));
  return envelope["payload"];
}

const std::string kFast = " --restarts 6 --max-iters 120";

}  // namespace

TEST_CASE("construct: antisym d=4 reports dimension 6") {
  const RunResult r = run("construct --family antisym --d 4" + kFast);
  REQUIRE(r.exit_code == 0);
  const json payload = payload_of(r);
  CHECK(payload["dimension"] == 6);
  CHECK(payload["maxSchmidt"]["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("construct: parthasarathy d=3 reports dim S = 4") {
  const RunResult r = run("construct --family parthasarathy --d 3" + kFast);
  REQUIRE(r.exit_code == 0);
  CHECK(payload_of(r)["dimension"] == 4);
}

TEST_CASE("construct: bell-extension d=6 n=2 reports dimension 17") {
  const RunResult r = run("construct --family bell-extension --d 6 --n 2" + kFast);
  REQUIRE(r.exit_code == 0);
  CHECK(payload_of(r)["dimension"] == 17);
}

TEST_CASE("verify: exit codes 0 / 3 / 2") {
  CHECK(run("verify --family antisym-subspace --d 8 --n 26 --p 3" + kFast).exit_code == 0);
  CHECK(run("verify --family antisym-subspace --d 8 --n 25 --p 3" + kFast).exit_code == 3);
  CHECK(run("verify --family parthasarathy --d 2 --p 3 --m 0.5" + kFast).exit_code == 3);
  CHECK(run("verify --family antisym --d 4" + kFast).exit_code == 2);       // missing --p
  CHECK(run("verify --family bogus --d 4 --p 3" + kFast).exit_code == 2);   // unknown family
  CHECK(run("verify --family antisym --d 4 --p 0.5" + kFast).exit_code == 2);
}

TEST_CASE("verify: payload verdict matches the exit code") {
  const RunResult r = run("verify --family antisym-subspace --d 8 --n 26 --p 3" + kFast);
  REQUIRE(r.exit_code == 0);
  const json payload = payload_of(r);
  CHECK(payload["analytic"]["breaks"] == true);
  CHECK(payload["analytic"]["margin"].get<double>() == doctest::Approx(0.0507).epsilon(0.02));
}

TEST_CASE("scan: CSV columns, row count, and header metadata") {
  const RunResult r = run("scan --family antisym-subspace --p-grid 3 --d-grid 4..12");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# d0[p=3]=7") != std::string::npos);
  CHECK(r.out.find("family,p,d,member,n_or_x0,C,c,margin") != std::string::npos);
  int data_rows = 0;
  std::istringstream stream(r.out);
  std::string line;
  bool header_seen = false;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    ++data_rows;
  }
  CHECK(data_rows == 9);  // |pGrid| * |dGrid| = 1 * 9
}

TEST_CASE("scan: json format reports extension membership from d=8") {
  const RunResult r = run("scan --family bell-extension --p-grid 3 --d-grid 4..12 --format json");
  REQUIRE(r.exit_code == 0);
  const json payload = payload_of(r);
  int first_member = 0;
  for (const auto& row : payload["rows"])
    if (row["member"] == "true" && first_member == 0) first_member = row["d"].get<int>();
  CHECK(first_member == 8);
}

TEST_CASE("scan: p=2 extension rows are inconclusive") {
  const RunResult r = run("scan --family bell-extension --p-grid 2 --d-grid 4..12");
  REQUIRE(r.exit_code == 0);
  std::istringstream stream(r.out);
  std::string line;
  int inconclusive = 0;
  while (std::getline(stream, line))
    if (line.find(",inconclusive,") != std::string::npos) ++inconclusive;
  CHECK(inconclusive == 9);
}

TEST_CASE("scan: empty grid is a usage error") {
  CHECK(run("scan --family antisym --p-grid '' --d-grid 4").exit_code == 2);
  CHECK(run("scan --family antisym --d-grid 4").exit_code == 2);  // missing p grid
}

TEST_CASE("oracle: determinism under a fixed seed") {
  const std::string cmd = "oracle --target antisym-sup --d 5 --seed 7" + kFast;
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(payload_of(a) == payload_of(b));  // timestamps differ, payloads must not
  CHECK(payload_of(a)["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("oracle: md target and seed from the environment") {
  const RunResult r = run("oracle --target md --d 2" + kFast, "ADDLAB_SEED=11");
  REQUIRE(r.exit_code == 0);
  const json envelope = json::parse(r.out);
  CHECK(envelope["seed"] == 11);
  CHECK(envelope["payload"]["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("oracle: unknown target is a usage error") {
  CHECK(run("oracle --target bogus --d 4").exit_code == 2);
}
