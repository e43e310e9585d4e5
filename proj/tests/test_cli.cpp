#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

std::string cli_path;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file = "cli_test_stdout.txt";
  std::string cmd = cli_path + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("count spellings and exit codes") {
  CHECK(run("count 1,2,1").out == "5\n");
  CHECK(run("count 5").out == "1\n");
  CHECK(run("count {3,5,9}@10").out == "8361\n");
  CHECK(run("count 0,2").exit_code == 2);
  CHECK(run("count bogus").exit_code == 2);
  CHECK(run("count").exit_code == 2);
}

TEST_CASE("density export in both formats") {
  RunResult csv = run("density 4 --target first --grid 5 --out dens.csv");
  CHECK(csv.exit_code == 0);
  std::string content = slurp("dens.csv");
  CHECK(content.find("t,density,density_exact,cdf,cdf_exact\n") == 0);
  CHECK(content.find("0.25,1.6875,27/16") != std::string::npos);

  RunResult json = run("density 2,2 --target P1 --given P4=1/2 --format json --grid 5 "
                       "--no-timestamp --out dens.json");
  CHECK(json.exit_code == 0);
  auto j = nlohmann::json::parse(slurp("dens.json"));
  CHECK(j["variable"] == "X_1");
  CHECK(j["conditioning"] == "Y_2=1/2");
  CHECK(j.count("generated_at") == 0);
  // frozen conditional value d(1/4 | last = 1/2) = 3/2
  CHECK(j["table"][1]["density_exact"] == "3/2");

  CHECK(run("density 4 --target P9").exit_code == 2);
  CHECK(run("density 4 --target bogus").exit_code == 2);
  CHECK(run("density 4 --given P2=7/2").exit_code == 2);
}

TEST_CASE("sampling is reproducible per seed") {
  REQUIRE(run("sample 2,2 --samples 25 --seed 11 --out s1.csv").exit_code == 0);
  REQUIRE(run("sample 2,2 --samples 25 --seed 11 --out s2.csv").exit_code == 0);
  REQUIRE(run("sample 2,2 --samples 25 --seed 12 --out s3.csv").exit_code == 0);
  CHECK(slurp("s1.csv") == slurp("s2.csv"));
  CHECK(slurp("s1.csv") != slurp("s3.csv"));
  RunResult embedded = run("sample 3,1 --samples 2 --seed 5 --embed");
  CHECK(embedded.exit_code == 0);
  // 4 permutation entries + 4 embedding coordinates per row
  std::string first_line = embedded.out.substr(0, embedded.out.find('\n'));
  CHECK(std::count(first_line.begin(), first_line.end(), ',') == 7);
}

TEST_CASE("verify prints one line per suite and writes a report") {
  RunResult ok = run("verify partition --n-max 8 --no-timestamp --out report.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("PASS") == 0);
  auto j = nlohmann::json::parse(slurp("report.json"));
  CHECK(j["suite"] == "partition");
  CHECK(j["pass"] == true);
  CHECK(j["schema"] == "descents-report/1");
  CHECK(j.count("generated_at") == 0);

  RunResult same = run("verify partition --n-max 8 --no-timestamp --out report2.json");
  CHECK(slurp("report.json") == slurp("report2.json"));

  CHECK(run("verify nosuch").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
}

TEST_CASE("experiments emit curves") {
  RunResult decay = run("experiment decay --sizes 6 --sizes 8 --out decay.csv");
  CHECK(decay.exit_code == 0);
  std::string content = slurp("decay.csv");
  CHECK(content.find("size,sup_gap,cdf_gap\n") == 0);
  CHECK(std::count(content.begin(), content.end(), '\n') == 3);

  RunResult trunc = run("experiment truncation 2,2,2,2,2,2,2,2 --sizes 8 --sizes 12 --out t.csv");
  CHECK(trunc.exit_code == 0);
  CHECK(slurp("t.csv").find("n,sup_gap\n") == 0);

  RunResult lp = run("experiment lp-gaps 2,2,2,2,2,2 --gaps 2 --samples 500 --seeds 2 --out lp.csv");
  CHECK(lp.exit_code == 0);
  CHECK(slurp("lp.csv").find("gap,seed_index,tv,bound\n") == 0);

  CHECK(run("experiment decay").exit_code == 2);
  CHECK(run("experiment nosuch --sizes 4").exit_code == 2);
}

TEST_CASE("gibbs rows and csv summaries") {
  RunResult g = run("sample 2,2,2 --gibbs --samples 4 --seed 3 --burnin 20");
  CHECK(g.exit_code == 0);
  std::string first_line = g.out.substr(0, g.out.find('\n'));
  CHECK(std::count(first_line.begin(), first_line.end(), ',') == 5);  // 6 particles
  RunResult same = run("sample 2,2,2 --gibbs --samples 4 --seed 3 --burnin 20");
  CHECK(same.out == g.out);

  RunResult v = run("verify andre --csv sum.csv");
  CHECK(v.exit_code == 0);
  std::string csv = slurp("sum.csv");
  CHECK(csv.find("criterion,suite,pass,detail\n") == 0);
  CHECK(csv.find("3,andre,PASS") != std::string::npos);

  CHECK(run("density 4 --out \"\"").exit_code == 2);
}

TEST_CASE("config file mirrors flags") {
  {
    std::ofstream cfg("cli.cfg");
    cfg << "[sample]\nsamples=7\nseed=11\n";
  }
  RunResult a = run("sample 2,2 --config cli.cfg --out c1.csv");
  CHECK(a.exit_code == 0);
  RunResult b = run("sample 2,2 --samples 7 --seed 11 --out c2.csv");
  CHECK(b.exit_code == 0);
  std::string c1 = slurp("c1.csv");
  CHECK(c1 == slurp("c2.csv"));
  CHECK(std::count(c1.begin(), c1.end(), '\n') == 7);
}

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[argc - 1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv);
  return context.run();
}
