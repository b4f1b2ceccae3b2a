#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* path = std::getenv("JOBSHOP_CLI");
  REQUIRE_MESSAGE(path != nullptr, "JOBSHOP_CLI must point at the built binary");
  return path;
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + "'" + cli_path() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  os << content;
}

std::string drop_timing_lines(const std::string& text) {
  std::istringstream is(text);
  std::string line, out;
  while (std::getline(is, line))
    if (line.rfind("# timing", 0) != 0) out += line + "\n";
  return out;
}

bool file_exists(const std::string& path) {
  std::ifstream is(path);
  return is.good();
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p, const std::string& content) : path(std::move(p)) {
    write_file(path, content);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kToyText = "2 2\n0 3 1 2\n1 2 0 4\n";

}  // namespace

TEST_CASE("solve reports the best makespan") {
  TempFile toy("cli_toy.txt", kToyText);
  const auto res = run_cli("solve --file " + toy.path + " --algo bfo --seed 3 "
                           "--pop-size 4 --n-chemo 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("best 7\n") != std::string::npos);
  CHECK(res.out.find("instance cli_toy size 2x2 algo bfo seed 3") != std::string::npos);
}

TEST_CASE("solve output is reproducible modulo the timing line") {
  TempFile toy("cli_toy_repro.txt", kToyText);
  const std::string args = "solve --file " + toy.path +
                           " --algo hbfo --seed 11 --runs 2 --pop-size 4 --n-chemo 5";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(drop_timing_lines(a.out) == drop_timing_lines(b.out));
  CHECK(a.out.find("# timing") != std::string::npos);
}

TEST_CASE("solve dumps are attached on request") {
  TempFile toy("cli_toy_dump.txt", kToyText);
  const auto res = run_cli("solve --file " + toy.path +
                           " --algo hbfo --seed 1 --pop-size 4 --n-chemo 3 "
                           "--dump-schedule --dump-pheromone");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"makespan\"") != std::string::npos);
  CHECK(res.out.find("\"operations\"") != std::string::npos);

  // The pheromone dump contributes bare numeric CSV rows.
  std::istringstream lines(res.out);
  std::string line;
  int csv_rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0]))) continue;
    if (line.find(',') != std::string::npos &&
        line.find_first_not_of("0123456789.,eE+-") == std::string::npos)
      ++csv_rows;
  }
  CHECK(csv_rows == 2);  // one row per job of the 2x2 instance

  // Pheromone dump is only defined for the hybrid.
  const auto bad = run_cli("solve --file " + toy.path + " --algo bfo --dump-pheromone");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("solve writes a gantt file") {
  TempFile toy("cli_toy_gantt.txt", kToyText);
  const std::string svg_path = "cli_toy_gantt.svg";
  std::remove(svg_path.c_str());
  const auto res = run_cli("solve --file " + toy.path +
                           " --algo bfo --seed 2 --pop-size 4 --n-chemo 3 --gantt " +
                           svg_path);
  CHECK(res.exit_code == 0);
  std::ifstream svg(svg_path);
  REQUIRE(svg.good());
  std::string first_line;
  std::getline(svg, first_line);
  CHECK(first_line.rfind("<svg", 0) == 0);
  std::stringstream rest;
  rest << svg.rdbuf();
  CHECK(rest.str().find("J0.0") != std::string::npos);
  std::remove(svg_path.c_str());
}

TEST_CASE("JOBSHOP_SEED env is the default seed") {
  TempFile toy("cli_toy_env.txt", kToyText);
  const std::string base = "solve --file " + toy.path + " --algo bfo --pop-size 4 --n-chemo 5";
  const auto via_env = run_cli(base, "JOBSHOP_SEED=21 ");
  const auto via_flag = run_cli(base + " --seed 21");
  CHECK(via_env.exit_code == 0);
  CHECK(drop_timing_lines(via_env.out) == drop_timing_lines(via_flag.out));

  // An explicit flag wins over the environment.
  const auto flag_wins = run_cli(base + " --seed 5", "JOBSHOP_SEED=21 ");
  const auto plain5 = run_cli(base + " --seed 5");
  CHECK(drop_timing_lines(flag_wins.out) == drop_timing_lines(plain5.out));
}

TEST_CASE("config file provides defaults that flags override") {
  TempFile toy("cli_toy_cfg.txt", kToyText);
  TempFile cfg("cli_test.cfg", "alpha=0.25\nn-chemo=5\npop-size=4\n");
  const auto res = run_cli("solve --file " + toy.path + " --algo hbfo --seed 1 --config " +
                           cfg.path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("alpha=0.25") != std::string::npos);

  const auto overridden = run_cli("solve --file " + toy.path +
                                  " --algo hbfo --seed 1 --alpha 0.4 --config " +
                                  cfg.path);
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.out.find("alpha=0.4") != std::string::npos);
}

TEST_CASE("oracle prints the exact optimum") {
  TempFile toy("cli_toy_oracle.txt", kToyText);
  const auto res = run_cli("oracle --file " + toy.path);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "7\n");

  const auto solo = run_cli("oracle --file " + toy.path + " --limit 6");
  CHECK(solo.exit_code == 0);

  const auto too_large = run_cli("oracle --instance la01");
  CHECK(too_large.exit_code == 2);
  CHECK(too_large.out == "TooLarge\n");

  const auto tiny_limit = run_cli("oracle --file " + toy.path + " --limit 5");
  CHECK(tiny_limit.exit_code == 2);
  CHECK(tiny_limit.out == "TooLarge\n");
}

TEST_CASE("exit codes distinguish usage from data errors") {
  TempFile toy("cli_toy_exit.txt", kToyText);

  CHECK(run_cli("").exit_code == 1);                       // missing subcommand
  CHECK(run_cli("solve --no-such-flag").exit_code == 1);   // unknown flag
  CHECK(run_cli("solve --file " + toy.path + " --algo aco").exit_code == 1);
  CHECK(run_cli("solve --file " + toy.path + " --pop-size 3").exit_code == 1);
  CHECK(run_cli("solve").exit_code == 1);                  // no source
  CHECK(run_cli("bench --suite nope").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);

  CHECK(run_cli("solve --instance la99").exit_code == 2);  // unknown builtin
  CHECK(run_cli("solve --file no_such_file.txt").exit_code == 2);
  TempFile bad("cli_bad_instance.txt", "1 1\n0 -4\n");
  CHECK(run_cli("solve --file " + bad.path).exit_code == 2);
}

TEST_CASE("bench emits a table and raw records") {
  const std::string out_csv = "cli_bench_out.csv";
  const std::string raw_path = out_csv + ".runs.jsonl";
  std::remove(out_csv.c_str());
  std::remove(raw_path.c_str());

  const auto res = run_cli(
      "bench --instance la05 --algo bfo,hbfo --runs 2 --seed 5 --max-evals 400 "
      "--pop-size 4 --n-chemo 5 --output " + out_csv);
  CHECK(res.exit_code == 0);
  REQUIRE(file_exists(out_csv));
  REQUIRE(file_exists(raw_path));

  std::ifstream table(out_csv);
  std::stringstream table_text;
  table_text << table.rdbuf();
  CHECK(table_text.str().find("la05,10,5,bfo,2,") != std::string::npos);
  CHECK(table_text.str().find("la05,10,5,hbfo,2,") != std::string::npos);
  CHECK(table_text.str().find("budget=400") != std::string::npos);

  std::ifstream raw(raw_path);
  std::string line;
  int lines = 0;
  while (std::getline(raw, line)) ++lines;
  CHECK(lines == 5);  // meta + 2 algos x 2 runs

  std::remove(out_csv.c_str());
  std::remove(raw_path.c_str());
}

TEST_CASE("bench runs are byte-stable apart from timing lines") {
  const std::string args =
      "bench --instance la05 --algo hbfo --runs 2 --seed 9 --max-evals 300 "
      "--pop-size 4 --n-chemo 5";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("# timing") != std::string::npos);
  CHECK(drop_timing_lines(a.out) == drop_timing_lines(b.out));
}

TEST_CASE("bench workers do not change the table") {
  const std::string base =
      "bench --instance la05 --algo bfo,hbfo --runs 2 --seed 3 --max-evals 300 "
      "--pop-size 4 --n-chemo 5";
  const auto seq = run_cli(base);
  const auto par = run_cli(base + " --workers 4");
  CHECK(seq.exit_code == 0);
  CHECK(par.exit_code == 0);
  CHECK(drop_timing_lines(seq.out) == drop_timing_lines(par.out));
}

TEST_CASE("usage errors leave no partial output files") {
  const std::string out_csv = "cli_bench_partial.csv";
  std::remove(out_csv.c_str());
  const auto res = run_cli("bench --instance la05 --algo bogus --output " + out_csv);
  CHECK(res.exit_code == 1);
  CHECK(!file_exists(out_csv));

  // Data errors do not leave partial files either.
  const auto res2 = run_cli("bench --instance nope --output " + out_csv);
  CHECK(res2.exit_code == 2);
  CHECK(!file_exists(out_csv));
}

TEST_CASE("markdown and json formats are accepted") {
  const auto md = run_cli(
      "bench --instance la05 --algo hbfo --runs 1 --seed 2 --max-evals 200 "
      "--pop-size 4 --n-chemo 5 --format markdown");
  CHECK(md.exit_code == 0);
  CHECK(md.out.find("| INSTANCE | SIZE | BFO | HBFO | REFERENCE |") != std::string::npos);

  const auto js = run_cli(
      "bench --instance la05 --algo hbfo --runs 1 --seed 2 --max-evals 200 "
      "--pop-size 4 --n-chemo 5 --format json");
  CHECK(js.exit_code == 0);
  CHECK(js.out.find("\"rows\"") != std::string::npos);
}
