#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + std::string(LLV_LAB_BIN) + " " +
                              args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture_path() { return std::string(LLV_DATA_DIR) + "/k3type-r3.json"; }

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / name) {
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("quaternion suite passes and reports its dimension") {
  const RunResult text = run_cli("quaternion");
  CHECK(text.code == 0);
  CHECK(text.out.find("[FAIL]") == std::string::npos);

  const RunResult report = run_cli("--json quaternion");
  CHECK(report.code == 0);
  const json doc = json::parse(report.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("report") == "quaternion");
  CHECK(doc.at("closure_dim") == 10);
  REQUIRE(doc.at("checks").is_array());
  CHECK(doc.at("checks").size() >= 9);
  for (const json& check : doc.at("checks")) {
    CHECK(check.contains("name"));
    CHECK(check.contains("passed"));
    CHECK(check.contains("expected"));
    CHECK(check.contains("actual"));
    CHECK(check.contains("paper_ref"));
    CHECK(check.at("passed") == true);
  }
}

TEST_CASE("verbitsky subcommand reports the dimension vector") {
  const RunResult report = run_cli("--json verbitsky --rank 5 --n 2");
  CHECK(report.code == 0);
  const json doc = json::parse(report.out);
  CHECK(doc.at("dims") == json::array({1, 5, 15, 5, 1}));

  const RunResult closure = run_cli("--json verbitsky --rank 4 --n 2 --closure");
  CHECK(closure.code == 0);
  const json closure_doc = json::parse(closure.out);
  CHECK(closure_doc.at("closure_dim") == 15);
}

TEST_CASE("validate accepts the fixture and rejects missing files") {
  CHECK(run_cli("validate " + fixture_path()).code == 0);
  CHECK(run_cli("validate /nonexistent/algebra.json").code == 2);
}

TEST_CASE("malformed content exits one, usage errors exit two") {
  const TempFile bad_json("llv_cli_bad.json", "{ this is not json");
  CHECK(run_cli("validate " + bad_json.path()).code == 1);

  const TempFile bad_algebra("llv_cli_inconsistent.json", R"({
    "name": "broken", "shift": 2,
    "components": [{"degree": 0, "dim": 1}, {"degree": 4, "dim": 2}],
    "unit": ["1"], "integral": ["1", "0"], "products": []
  })");
  CHECK(run_cli("validate " + bad_algebra.path()).code == 1);

  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("llv").code == 2);
  CHECK(run_cli("verbitsky --rank 5").code == 2);
  CHECK(run_cli("verbitsky --rank 1 --n 2").code == 2);
  CHECK(run_cli("llv " + fixture_path() + " --generators sometimes").code == 2);
}

TEST_CASE("llv subcommand runs on files and builtins") {
  const RunResult from_file = run_cli("--json llv " + fixture_path());
  CHECK(from_file.code == 0);
  const json doc = json::parse(from_file.out);
  CHECK(doc.at("closure_dim") == 10);

  CHECK(run_cli("llv k3type-r4").code == 0);
  CHECK(run_cli("llv " + fixture_path() + " --generators list").code == 0);
}

TEST_CASE("gram files override the default form") {
  const TempFile gram("llv_cli_gram.json", "[[0, 1], [1, 0]]");
  const RunResult report = run_cli("--json verbitsky --rank 2 --n 2 --gram " + gram.path());
  CHECK(report.code == 0);
  CHECK(json::parse(report.out).at("dims") == json::array({1, 2, 3, 2, 1}));

  CHECK(run_cli("verbitsky --rank 3 --n 2 --gram " + gram.path()).code == 2);

  const TempFile rational_gram("llv_cli_gram_rat.json", R"([["0","1/2"],["1/2","0"]])");
  CHECK(run_cli("verbitsky --rank 2 --n 2 --gram " + rational_gram.path()).code == 0);
}

TEST_CASE("prim reports are seed-deterministic") {
  const std::string args = "--json prim verbitsky-r4-n2";
  const RunResult first = run_cli(args, "LLV_LAB_SEED=5");
  const RunResult second = run_cli(args, "LLV_LAB_SEED=5");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(json::parse(first.out).at("seed") == 5);

  const RunResult default_seed = run_cli("--json prim quaternion");
  CHECK(json::parse(default_seed.out).at("seed") == 7);

  CHECK(run_cli("prim quaternion", "LLV_LAB_SEED=notanumber").code == 2);
}

TEST_CASE("witness wording never claims a proof") {
  const RunResult report = run_cli("--json prim verbitsky-r4-n2");
  CHECK(report.code == 0);
  CHECK(report.out.find("witness passed") != std::string::npos);
  CHECK(report.out.find("proven") == std::string::npos);
}
