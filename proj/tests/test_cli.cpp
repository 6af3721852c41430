// End-to-end checks of the installed binary: exit codes, pinned outputs,
// byte-identical reruns. Invoked as: test_cli <path-to-polyzcl>.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string g_binary;
int g_failures = 0;

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

void expect_exit(const std::string& args, int wanted) {
  RunResult r = run(args);
  expect(r.exit_code == wanted,
         args + " exited " + std::to_string(r.exit_code) + ", wanted " + std::to_string(wanted));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <polyzcl binary>\n";
    return 2;
  }
  g_binary = argv[1];

  // analyze from lengths
  {
    RunResult r = run("analyze --lengths 1,1,1,3,3,4");
    expect(r.exit_code == 0, "analyze lengths exit code");
    expect(r.output.find("<632>") != std::string::npos, "analyze shows the code");
    expect(r.output.find("(1, 6, 6, 1)") != std::string::npos, "analyze shows betti (1,6,6,1)");
    expect(r.output.find("[5, 6]") != std::string::npos, "analyze shows zcl interval");
    expect(r.output.find("[6, 7]") != std::string::npos, "analyze shows tc interval");
    expect(r.output.find("connected sum of two 3-tori") != std::string::npos,
           "analyze notes the genus-2 oracle");
  }

  // analyze --json: pinned fields and byte determinism
  {
    RunResult r1 = run("analyze --code 9421,95 --n 9 --json");
    RunResult r2 = run("analyze --code 9421,95 --n 9 --json");
    expect(r1.exit_code == 0, "analyze json exit code");
    expect(r1.output == r2.output, "analyze json reruns are byte-identical");
    auto j = nlohmann::json::parse(r1.output);
    expect(j["zcl"]["exact"] == 6, "json zcl exact 6");
    expect(j["tc"]["lower"] == 7 && j["tc"]["upper"] == 13, "json tc (7,13)");
    expect(j["betti"] == nlohmann::json::array({1, 5, 5, 4, 5, 5, 1}), "json betti");
  }

  // analyze from a table code
  {
    RunResult r = run("analyze --code 84321 --n 8 --json");
    expect(r.exit_code == 0, "analyze 84321 exit code");
    auto j = nlohmann::json::parse(r.output);
    expect(j["zcl"]["lower"] == 5, "84321 zcl_lower 5");
    expect(j["model_exact"] == false, "84321 not model-exact");
  }

  // realize
  expect_exit("realize --code 8531 --n 8", 0);
  expect_exit("realize --code 7531 --n 8", 3);
  {
    RunResult r = run("realize --code 632 --n 6");
    expect(r.exit_code == 0, "realize 632 exit code");
    expect(r.output.find("round-trip: ok") != std::string::npos, "realize reports the round trip");
  }

  // the disconnected code: realizable, but outside the ring pipeline
  expect_exit("realize --code 854321 --n 8", 0);
  expect_exit("ring --code 854321 --n 8", 3);
  expect_exit("zcl --code 854321 --n 8", 3);

  // error paths
  expect_exit("analyze --lengths 1,1", 2);
  expect_exit("analyze --lengths 1.5,2,2,3", 2);
  expect_exit("analyze --lengths 1,1,1,1", 3);
  expect_exit("analyze --lengths 1,1,1,9", 3);
  expect_exit("analyze --code 9421,94 --n 9", 2);
  expect_exit("enumerate --n 3", 2);
  expect_exit("enumerate --n 12", 2);
  expect_exit("nonsense", 2);
  expect_exit("zcl --code 9421,95 --n 9 --search --budget 3", 4);

  // enumerate: summary content and determinism
  {
    RunResult r1 = run("enumerate --n 5 --classify --no-cache");
    RunResult r2 = run("enumerate --n 5 --classify --no-cache");
    expect(r1.exit_code == 0, "enumerate n=5 exit code");
    expect(r1.output == r2.output, "enumerate reruns are byte-identical");
    expect(r1.output.find("total codes: 6") != std::string::npos, "pentagon census size");
    expect(r1.output.find("disconnected: 1") != std::string::npos, "pentagon disconnected count");
    expect(r1.output.find("5,\"521\",2,2,,,,false") != std::string::npos,
           "disconnected row has empty zcl columns");
  }

  // enumerate cache: second run must reproduce the same bytes via the cache
  {
    RunResult r1 = run("enumerate --n 4 --classify");
    RunResult r2 = run("enumerate --n 4 --classify");
    expect(r1.exit_code == 0 && r2.exit_code == 0, "enumerate cached exit codes");
    expect(r1.output == r2.output, "cached rerun is byte-identical");
  }

  // enumerate --json: stable schema, deterministic bytes
  {
    RunResult r1 = run("enumerate --n 5 --classify --no-cache --json");
    RunResult r2 = run("enumerate --n 5 --classify --no-cache --json");
    expect(r1.exit_code == 0, "enumerate json exit code");
    expect(r1.output == r2.output, "enumerate json reruns are byte-identical");
    auto j = nlohmann::json::parse(r1.output);
    expect(j["summary"]["total"] == 6, "enumerate json total");
    expect(j["rows"].size() == 6, "enumerate json row count");
    expect(j["rows"][0]["genes"] == "5", "enumerate json first row");
  }

  // realize --json
  {
    RunResult r = run("realize --code 632 --n 6 --json");
    expect(r.exit_code == 0, "realize json exit code");
    auto j = nlohmann::json::parse(r.output);
    expect(j["round_trip"] == true, "realize json round trip");
    expect(j["lengths"].size() == 6, "realize json lengths");
  }

  // ring dump
  {
    RunResult r = run("ring --code 632 --n 6");
    expect(r.exit_code == 0, "ring exit code");
    auto j = nlohmann::json::parse(r.output);
    expect(j["m"] == 3, "ring m");
    expect(j["basis"].size() == 14, "ring basis size");
    bool found_pairing = false;
    for (const auto& p : j["products"])
      if (p[0] == 1 && p[2].size() == 1) found_pairing = true;
    expect(found_pairing, "ring products present");
  }

  // zcl command with search
  {
    RunResult r = run("zcl --code 632 --n 6 --search");
    expect(r.exit_code == 0, "zcl exit code");
    expect(r.output.find("zcl: [5, 6]") != std::string::npos, "zcl interval");
    expect(r.output.find("barred-generator search: 5") != std::string::npos, "zcl search result");
  }

  if (g_failures == 0) {
    std::cout << "cli: all checks passed\n";
    return 0;
  }
  std::cout << "cli: " << g_failures << " failures\n";
  return 1;
}
