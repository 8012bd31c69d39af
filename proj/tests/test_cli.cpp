#include <sys/wait.h>

#include <cstdio>
#include <regex>
#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TOPOLAB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int st = pclose(pipe);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string sample(const char* name) { return std::string(SAMPLES_DIR) + "/" + name; }

std::string zero_elapsed(std::string s) {
  static const std::regex re("\"elapsed_ms\": [0-9]+");
  return std::regex_replace(s, re, "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("check echoes the canonical space") {
  const RunResult r = run_cli("check " + sample("example1.top"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output ==
          "points: a b c d\n"
          "open:\n"
          "open: a\n"
          "open: b\n"
          "open: a b\n"
          "open: a c d\n"
          "open: a b c d\n");
}

TEST_CASE("families prints a single requested family bare") {
  const RunResult r = run_cli("families " + sample("example1.top") + " --lc aLC");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n");
}

TEST_CASE("families defaults to the topology and labels multiple requests") {
  const RunResult bare = run_cli("families " + sample("sierpinski.top"));
  REQUIRE(bare.exit_code == 0);
  REQUIRE(bare.output == "{}\n{a}\n{a,b}\n");

  const RunResult multi =
      run_cli("families " + sample("example1.top") + " --variant a --lc aLC");
  REQUIRE(multi.exit_code == 0);
  REQUIRE(multi.output ==
          "== a ==\n{}\n{b}\n{a,c,d}\n{a,b,c,d}\n"
          "== aLC ==\n{}\n{b}\n{a,c,d}\n{a,b,c,d}\n");
}

TEST_CASE("classify reports every membership plus the characterization") {
  const RunResult empty = run_cli("classify " + sample("example1.top") + " --set \"{}\"");
  REQUIRE(empty.exit_code == 0);
  REQUIRE(empty.output ==
          "set: {}\n"
          "open: true\n"
          "delta-open: true\n"
          "regular-open: true\n"
          "semi-open: true\n"
          "alpha-open: true\n"
          "a-open: true\n"
          "b-open: true\n"
          "e-open: true\n"
          "feebly-open: true\n"
          "LC: true\n"
          "alphaLC: true\n"
          "aLC: true\n"
          "bLC: true\n"
          "eLC: true\n"
          "FLC: true\n"
          "aLC-characterization: a=true b=true c=true d=true e=true P={}\n");

  const RunResult c3 = run_cli("classify " + sample("example3.top") + " --set \"{c}\"");
  REQUIRE(c3.exit_code == 0);
  REQUIRE(c3.output ==
          "set: {c}\n"
          "open: false\n"
          "delta-open: false\n"
          "regular-open: false\n"
          "semi-open: false\n"
          "alpha-open: false\n"
          "a-open: false\n"
          "b-open: false\n"
          "e-open: false\n"
          "feebly-open: false\n"
          "LC: false\n"
          "alphaLC: true\n"
          "aLC: true\n"
          "bLC: true\n"
          "eLC: true\n"
          "FLC: true\n"
          "aLC-characterization: a=true b=true c=true d=true e=true P={a,b,c}\n");
}

TEST_CASE("diagram prints the membership matrix and confirms every arrow") {
  const RunResult r = run_cli("diagram " + sample("example1.top"));
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("LC  alphaLC  aLC  bLC  eLC  FLC") != std::string::npos);
  REQUIRE(r.output.find("\n{a}") != std::string::npos);
  REQUIRE(r.output.find("arrow LC=>FLC: ok") != std::string::npos);
  REQUIRE(r.output.find("arrow alphaLC=>bLC: ok") != std::string::npos);
  REQUIRE(r.output.find("all arrows hold") != std::string::npos);
  REQUIRE(r.output.find("VIOLATED") == std::string::npos);
}

TEST_CASE("search exits 1 on a finding and prints the record") {
  const RunResult r = run_cli("search --points 2 --claim 'LC=>aLC'");
  REQUIRE(r.exit_code == 1);
  REQUIRE(zero_elapsed(r.output) ==
          "{\n"
          "  \"claim\": \"LC=>aLC\",\n"
          "  \"status\": \"Found\",\n"
          "  \"space\": \"points: a b\\nopen:\\nopen: a\\nopen: a b\\n\",\n"
          "  \"subset\": \"{a}\",\n"
          "  \"checked_spaces\": 3,\n"
          "  \"max_n\": 2,\n"
          "  \"elapsed_ms\": 0\n"
          "}\n");
}

TEST_CASE("search exits 0 on exhaustion") {
  const RunResult r = run_cli("search --points 3 --claim 'aLC=>aLC'");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("\"status\": \"ExhaustedUpTo(3)\"") != std::string::npos);
  REQUIRE(r.output.find("\"checked_spaces\": 34") != std::string::npos);
}

TEST_CASE("search --question-3-10 emits both records") {
  const RunResult r = run_cli("search --points 3 --question-3-10");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("\"claim\": \"bLC=>eLC\"") != std::string::npos);
  REQUIRE(r.output.find("\"claim\": \"eLC=>bLC\"") != std::string::npos);
  REQUIRE(r.output.find("ExhaustedUpTo(3)") != std::string::npos);

  const RunResult again = run_cli("search --points 3 --question-3-10");
  REQUIRE(zero_elapsed(r.output) == zero_elapsed(again.output));
}

TEST_CASE("search --question-3-10 over all 4-point spaces exhausts both directions") {
  const RunResult r = run_cli("search --points 4 --question-3-10");
  REQUIRE(r.exit_code == 0);
  REQUIRE(zero_elapsed(r.output) ==
          "[\n"
          "  {\n"
          "    \"claim\": \"bLC=>eLC\",\n"
          "    \"status\": \"ExhaustedUpTo(4)\",\n"
          "    \"space\": null,\n"
          "    \"subset\": null,\n"
          "    \"checked_spaces\": 389,\n"
          "    \"max_n\": 4,\n"
          "    \"elapsed_ms\": 0\n"
          "  },\n"
          "  {\n"
          "    \"claim\": \"eLC=>bLC\",\n"
          "    \"status\": \"ExhaustedUpTo(4)\",\n"
          "    \"space\": null,\n"
          "    \"subset\": null,\n"
          "    \"checked_spaces\": 389,\n"
          "    \"max_n\": 4,\n"
          "    \"elapsed_ms\": 0\n"
          "  }\n"
          "]\n");
}

TEST_CASE("verify-paper replays the bundled worked examples") {
  const RunResult r = run_cli("verify-paper");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("verify-paper: all checks passed") != std::string::npos);
  REQUIRE(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("usage problems exit 2 and name the offender") {
  REQUIRE(run_cli("").exit_code == 2);
  REQUIRE(run_cli("frobnicate").exit_code == 2);
  REQUIRE(run_cli("check /no/such/file.top").exit_code == 2);
  REQUIRE(run_cli("check " + sample("example1.top") + " --bogus").exit_code == 2);
  REQUIRE(run_cli("families " + sample("example1.top") + " --variant zeta").exit_code == 2);
  REQUIRE(run_cli("search --points 2").exit_code == 2);
  REQUIRE(run_cli("search --points 2 --claim 'LC=>aLC' --question-3-10").exit_code == 2);
  REQUIRE(run_cli("search --points 9 --claim 'LC=>aLC'").exit_code == 2);

  const RunResult bad_claim = run_cli("search --points 2 --claim LC=nope");
  REQUIRE(bad_claim.exit_code == 2);
  REQUIRE(bad_claim.output.find("LC=nope") != std::string::npos);

  const RunResult bad_set = run_cli("classify " + sample("example1.top") + " --set \"{a,z}\"");
  REQUIRE(bad_set.exit_code == 2);
  REQUIRE(bad_set.output.find("'z'") != std::string::npos);

  const RunResult help = run_cli("--help");
  REQUIRE(help.exit_code == 0);
}

TEST_CASE("malformed space files exit 2 with the offending line") {
  const std::string tmp = "/tmp/topolab_bad_space.top";
  std::FILE* f = std::fopen(tmp.c_str(), "w");
  REQUIRE(f);
  std::fputs("points: a b c\nopen: a\nopen: b\n", f);
  std::fclose(f);
  const RunResult r = run_cli("check " + tmp);
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.output.find("not closed under union") != std::string::npos);
  std::remove(tmp.c_str());
}
