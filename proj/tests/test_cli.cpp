#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HSP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli bounds") {
  const auto r = run("bounds --gsp 2,8,1");
  CHECK(r.status == 0);
  CHECK(r.out.find("2^8:1,256,255,2,1,") != std::string::npos);
  CHECK(r.out.find(",11.3137,11.3137\n") != std::string::npos);

  const auto multi = run("bounds --rahsp 2^3:1,3^3:1");
  CHECK(multi.status == 0);
  CHECK(multi.out.find("2^3:1;3^3:1,216,91,6,1,6,6,\n") != std::string::npos);
}

TEST_CASE("cli parameter errors exit with 2") {
  CHECK(run("bounds --gsp 2,4,4").status == 2);
  CHECK(run("bounds --gsp 4,4,1").status == 2);
  CHECK(run("learn --gsp 2,4,1 --delta 0.5").status == 2);
  CHECK(run("sweep --gsp 2,4..6,0..1 --trials 2").status == 2);
  CHECK(run("bounds --no-such-flag").status == 2);
  CHECK(run("learn --instance /nonexistent-dir/x.txt").status == 1);
}

TEST_CASE("cli capacity errors exit with 3") {
  CHECK(run("learn --gsp 2,40,1").status == 3);
  CHECK(run("enumerate --gsp 2,30,15").status == 3);
}

TEST_CASE("cli sweep is deterministic") {
  const auto a = run("sweep --gsp 2,4..6,1 --trials 10 --seed 3 --threads 1");
  const auto b = run("sweep --gsp 2,4..6,1 --trials 10 --seed 3 --threads 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("p,n,k,delta,A,B,iterations,samples_used,trials,successes,success_rate,theta,ratio,seed\n", 0) == 0);
  CHECK(a.out.find("\n2,4,1,0.333333,26,3,7,371,10,") != std::string::npos);
}

TEST_CASE("cli learn and enumerate") {
  const auto path = (std::filesystem::temp_directory_path() / "hsp_cli_instance.txt").string();
  const auto a = run("learn --gsp 2,5,2 --seed 4 --save-instance " + path);
  CHECK(a.status == 0);
  CHECK(a.out.find("samples ") != std::string::npos);
  const auto b = run("learn --instance " + path + " --seed 4");
  CHECK(b.status == 0);
  CHECK(a.out == b.out);
  const auto e = run("enumerate --instance " + path + " --samples 12 --seed 1");
  CHECK(e.status == 0);
  CHECK(e.out.rfind("family_size 155\nenumerated 155\nconsistent ", 0) == 0);
  std::filesystem::remove(path);

  const auto many = run("learn --gsp 2,4,1 --trials 50 --seed 2");
  CHECK(many.status == 0);
  CHECK(many.out.find("samples_per_run 371\n") != std::string::npos);
  CHECK(run("selftest --criterion 3").status == 0);
}
