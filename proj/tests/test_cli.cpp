#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {
struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(DIAGCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}
}  // namespace

TEST_CASE("cli: worked examples") {
  auto csp = run_cli("csp-verify --family noncrossing_matchings --r 3 --n 1");
  CHECK(csp.code == 0);
  CHECK(csp.out.find("\"pass\": true") != std::string::npos);
  auto count = run_cli("enumerate --kind regular --r 4 --n 2 --k 2 --count-only");
  CHECK(count.code == 0);
  CHECK(count.out == "6\n");
  auto fd = run_cli("fakedegree --schur 2,2");
  CHECK(fd.code == 0);
  CHECK(fd.out == "[0,0,1,0,1]\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("enumerate --kind nonsense --r 2").code == 2);
  CHECK(run_cli("fakedegree --schur 1,2").code == 2);
  CHECK(run_cli("enumerate --kind matchings --r 30 --count-only").code == 3);
  CHECK(run_cli("enumerate --kind matchings --r 4 --count-only").out == "3\n");
}

TEST_CASE("cli: output is stable and every subcommand has a selftest") {
  auto a = run_cli("character --family sp_matchings --r 2 --n 1");
  auto b = run_cli("character --family sp_matchings --r 2 --n 1");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  for (const char* sub : {"enumerate", "character", "fakedegree", "csp-verify", "idempotent", "branching"})
    CHECK(run_cli(std::string(sub) + " --selftest --format csv").code == 0);
  CHECK(run_cli("branching --kind brauer --r 4 --format csv").code == 0);
  CHECK(run_cli("idempotent --kind brauer --n 2").code == 0);
  CHECK(run_cli("relations --kind sp --n 1 --format pretty").code == 0);
}
