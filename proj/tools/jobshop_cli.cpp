#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "jobshop/bench.hpp"
#include "jobshop/gantt.hpp"

namespace {

using namespace jobshop;

// Everything is buffered and flushed only after the command succeeds, so a
// failed run never leaves partial result files behind.
struct Outputs {
  std::string stdout_text;
  std::vector<std::pair<std::string, std::string>> files;

  void add_file(std::string path, std::string content) {
    files.emplace_back(std::move(path), std::move(content));
  }

  void flush() {
    for (const auto& [path, content] : files) {
      std::ofstream os(path, std::ios::binary);
      os << content;
      if (!os) fail(Errc::io_error, "cannot write " + path);
    }
    std::cout << stdout_text << std::flush;
  }
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_parameter:
    case Errc::odd_population:
      return 1;  // bad arguments
    default:
      return 2;  // bad or unusable data
  }
}

struct SourceOpts {
  std::string builtin;
  std::string file;
};

void add_source_options(CLI::App& cmd, SourceOpts& src, bool with_suite,
                        std::string* suite) {
  auto* a = cmd.add_option("--instance", src.builtin, "Builtin instance name");
  auto* b = cmd.add_option("--file", src.file, "Instance file path");
  a->excludes(b);
  if (with_suite) {
    auto* s = cmd.add_option("--suite", *suite,
                             "Instance suite (la-small, table3, table4)");
    s->excludes(a);
    s->excludes(b);
  }
}

JsspInstance load_source(const SourceOpts& src) {
  if (!src.builtin.empty()) return load_builtin(src.builtin);
  if (!src.file.empty()) return load_instance_file(src.file);
  fail(Errc::invalid_parameter, "need --instance or --file");
}

struct ParamOpts {
  HbfoParams params;
  bool swarming = false;
  SwarmingParams swarm;
  std::string health = "accumulated";

  HbfoParams resolve() const {
    HbfoParams p = params;
    p.bfo.health_mode =
        health == "current" ? HealthMode::current : HealthMode::accumulated;
    if (swarming) p.swarming = swarm;
    p.validate();
    return p;
  }
};

void add_param_options(CLI::App& cmd, ParamOpts& po) {
  cmd.add_option("--pop-size", po.params.bfo.S, "Population size S (even)")
      ->capture_default_str();
  cmd.add_option("--n-chemo", po.params.bfo.N_c, "Chemotactic generations per reproduction")
      ->capture_default_str();
  cmd.add_option("--n-swim", po.params.bfo.N_s, "Swim length limit")
      ->capture_default_str();
  cmd.add_option("--n-repro", po.params.bfo.N_re, "Reproduction rounds per dispersal")
      ->capture_default_str();
  cmd.add_option("--n-disperse", po.params.bfo.N_ed, "Elimination-dispersal rounds")
      ->capture_default_str();
  cmd.add_option("--p-disperse", po.params.bfo.p_ed, "Per-bacterium dispersal probability")
      ->capture_default_str();
  cmd.add_option("--health-mode", po.health,
                 "Reproduction ranking: accumulated or current")
      ->check(CLI::IsMember({"accumulated", "current"}))
      ->capture_default_str();
  cmd.add_option("--alpha", po.params.aco.alpha, "Global pheromone update weight")
      ->capture_default_str();
  cmd.add_option("--beta", po.params.aco.beta, "Desirability exponent")
      ->capture_default_str();
  cmd.add_option("--rho", po.params.aco.rho, "Local pheromone decay")
      ->capture_default_str();
  cmd.add_option("--q0", po.params.aco.q0, "Exploitation threshold")
      ->capture_default_str();
  cmd.add_option("--tau0", po.params.aco.tau0, "Initial pheromone level")
      ->capture_default_str();
  cmd.add_flag("--swarming", po.swarming, "Enable cell-to-cell coupling");
  cmd.add_option("--swarm-m", po.swarm.M, "Coupling magnitude M")
      ->capture_default_str();
  cmd.add_option("--swarm-wa", po.swarm.w_a, "Attractant width")
      ->capture_default_str();
  cmd.add_option("--swarm-wr", po.swarm.w_r, "Repellent width")
      ->capture_default_str();
}

std::string budget_text(long long budget) {
  return budget < 0 ? std::string("unlimited") : std::to_string(budget);
}

int run_solve(const SourceOpts& src, const ParamOpts& po, const std::string& algo_s,
              std::uint64_t seed, int runs, long long max_evals,
              bool dump_schedule, bool dump_pheromone, const std::string& gantt_path) {
  const Algo algo = parse_algo(algo_s);
  if (runs < 1) fail(Errc::invalid_parameter, "--runs must be >= 1");
  if (dump_pheromone && algo != Algo::hbfo)
    fail(Errc::invalid_parameter, "--dump-pheromone requires --algo hbfo");
  HbfoParams params = po.resolve();
  const JsspInstance inst = load_source(src);

  Outputs out;
  out.stdout_text += "instance " + inst.name + " size " +
                     std::to_string(inst.n_jobs) + "x" +
                     std::to_string(inst.n_machines) + " algo " + algo_name(algo) +
                     " seed " + std::to_string(seed) + " runs " +
                     std::to_string(runs) + " budget " + budget_text(max_evals) +
                     "\n";
  out.stdout_text += "params " + describe_params(params) + "\n";

  const auto t0 = std::chrono::steady_clock::now();
  RunResult best;
  PheromoneModel best_model(inst, params.aco);
  bool have_best = false;
  for (int r = 0; r < runs; ++r) {
    HbfoParams p = params;
    p.bfo.seed = seed + static_cast<std::uint64_t>(r);
    PheromoneModel model(inst, p.aco);
    const RunResult res = algo == Algo::bfo
                              ? run_bfo(inst, p.bfo, max_evals)
                              : run_hbfo(inst, p, max_evals, &model);
    out.stdout_text += "run seed=" + std::to_string(p.bfo.seed) +
                       " best=" + std::to_string(res.best_makespan) +
                       " evaluations=" + std::to_string(res.evaluations) + "\n";
    if (!have_best || res.best_makespan < best.best_makespan) {
      best = res;
      best_model = model;
      have_best = true;
    }
  }
  out.stdout_text += "best " + std::to_string(best.best_makespan) + "\n";

  const Schedule sched = decode(best.best_sequence, inst);
  if (dump_schedule) out.stdout_text += schedule_to_json(sched, inst) + "\n";
  if (dump_pheromone) out.stdout_text += best_model.to_csv();
  if (!gantt_path.empty()) out.add_file(gantt_path, emit_gantt(sched, inst));

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  out.stdout_text += "# timing total_ms=" + std::to_string(ms) + "\n";
  out.flush();
  return 0;
}

int run_bench(const SourceOpts& src, const std::string& suite, const ParamOpts& po,
              const std::string& algos_s, std::uint64_t seed, int runs,
              long long max_evals, int workers, const std::string& format_s,
              const std::string& output, std::string raw_out) {
  BenchConfig config;
  config.params = po.resolve();
  config.runs = runs;
  config.base_seed = seed;
  config.max_evaluations = max_evals;
  config.workers = workers;

  config.algos.clear();
  std::stringstream ss{algos_s};
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) config.algos.push_back(parse_algo(token));
  if (config.algos.empty())
    fail(Errc::invalid_parameter, "--algo list is empty");

  const TableFormat format = parse_format(format_s);
  if (!suite.empty())
    config.instances = resolve_suite(suite);
  else
    config.instances.push_back(load_source(src));

  std::vector<RunRecord> raw;
  const std::vector<SummaryRow> summary = run_suite(config, &raw);
  const std::vector<ComparisonRow> comparison = compare_to_reference(summary);

  BenchMeta meta;
  meta.algos = algos_s;
  meta.runs = config.runs;
  meta.base_seed = config.base_seed;
  meta.budget = resolve_budget(config);
  meta.params = config.params;

  Outputs out;
  const std::string table = emit_table(comparison, format, meta);
  if (output.empty())
    out.stdout_text += table;
  else
    out.add_file(output, table);
  if (raw_out.empty() && !output.empty()) raw_out = output + ".runs.jsonl";
  if (!raw_out.empty()) out.add_file(raw_out, emit_records_jsonl(raw, meta));
  out.flush();
  return 0;
}

int run_oracle(const SourceOpts& src, long long limit) {
  const JsspInstance inst = load_source(src);
  try {
    std::cout << brute_force_optimal(inst, limit) << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
    std::cout << "TooLarge\n";
    std::cerr << e.what() << "\n";
    return 2;
  }
}

// key=value lines, '#' comments, optional quotes around the value.
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(Errc::io_error, "cannot open config file: " + path);
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(Errc::invalid_parameter, "config line is not key=value: " + stripped);
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

// Config values act as defaults: options the command line already set are
// left alone, everything else is injected and the whole line reparsed.
bool inject_config_args(CLI::App& cmd, const std::string& path,
                        std::vector<std::string>& args) {
  bool injected = false;
  for (const auto& [key, value] : read_config_file(path)) {
    const CLI::Option* opt =
        key == "config" ? nullptr : cmd.get_option_no_throw("--" + key);
    if (opt == nullptr)
      fail(Errc::invalid_parameter, "unknown config key: " + key);
    if (opt->count() == 0) {
      args.push_back("--" + key + "=" + value);
      injected = true;
    }
  }
  return injected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Job-shop scheduling with bacterial foraging and a pheromone-guided hybrid"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Optimize one instance");
  SourceOpts solve_src;
  ParamOpts solve_params;
  std::string solve_algo = "hbfo";
  std::uint64_t solve_seed = 1;
  int solve_runs = 1;
  long long solve_evals = -1;
  bool dump_schedule = false, dump_pheromone = false;
  std::string gantt_path;
  add_source_options(*solve, solve_src, false, nullptr);
  solve->add_option("--algo", solve_algo, "bfo or hbfo")->capture_default_str();
  solve->add_option("--seed", solve_seed, "Base RNG seed")
      ->envname("JOBSHOP_SEED")
      ->capture_default_str();
  solve->add_option("--runs", solve_runs, "Independent seeded runs (seed..seed+runs-1)")
      ->capture_default_str();
  solve->add_option("--max-evals", solve_evals, "Decode budget (<0 = unlimited)")
      ->capture_default_str();
  solve->add_flag("--dump-schedule", dump_schedule, "Print the best schedule as JSON");
  solve->add_flag("--dump-pheromone", dump_pheromone,
                  "Print the final pheromone matrix as CSV (hbfo)");
  solve->add_option("--gantt", gantt_path, "Write an SVG Gantt chart of the best schedule");
  add_param_options(*solve, solve_params);
  std::string solve_config;
  solve->add_option("--config", solve_config,
                    "Config file with key=value defaults for these options");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  SourceOpts bench_src;
  ParamOpts bench_params;
  std::string bench_suite;
  std::string bench_algos = "bfo,hbfo";
  std::uint64_t bench_seed = 1;
  int bench_runs = 10;
  long long bench_evals = 0;
  int bench_workers = 1;
  std::string bench_format = "csv";
  std::string bench_output, bench_raw;
  add_source_options(*bench, bench_src, true, &bench_suite);
  bench->add_option("--algo", bench_algos, "Comma-separated list: bfo,hbfo")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Base RNG seed")
      ->envname("JOBSHOP_SEED")
      ->capture_default_str();
  bench->add_option("--runs", bench_runs, "Runs per (instance, algo)")
      ->capture_default_str();
  bench->add_option("--max-evals", bench_evals,
                    "Decode budget (0 = matched default, <0 = unlimited)")
      ->capture_default_str();
  bench->add_option("--workers", bench_workers, "Concurrent runner threads")
      ->capture_default_str();
  bench->add_option("--format", bench_format, "csv, markdown, or json")
      ->capture_default_str();
  bench->add_option("--output", bench_output, "Write the table here instead of stdout");
  bench->add_option("--raw-out", bench_raw,
                    "Write per-run JSONL records here (default: <output>.runs.jsonl)");
  add_param_options(*bench, bench_params);
  std::string bench_config;
  bench->add_option("--config", bench_config,
                    "Config file with key=value defaults for these options");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
  SourceOpts oracle_src;
  long long oracle_limit = 2000000;
  add_source_options(*oracle, oracle_src, false, nullptr);
  oracle->add_option("--limit", oracle_limit, "Max distinct sequences to enumerate")
      ->capture_default_str();

  const std::string no_config;
  try {
    app.parse(argc, argv);
    const std::string& config_path =
        solve->parsed() ? solve_config : bench->parsed() ? bench_config : no_config;
    if (!config_path.empty()) {
      CLI::App& cmd = solve->parsed() ? *solve : *bench;
      std::vector<std::string> args(argv + 1, argv + argc);
      if (inject_config_args(cmd, config_path, args)) {
        std::reverse(args.begin(), args.end());
        app.parse(args);
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }

  try {
    if (solve->parsed())
      return run_solve(solve_src, solve_params, solve_algo, solve_seed, solve_runs,
                       solve_evals, dump_schedule, dump_pheromone, gantt_path);
    if (bench->parsed())
      return run_bench(bench_src, bench_suite, bench_params, bench_algos,
                       bench_seed, bench_runs, bench_evals, bench_workers,
                       bench_format, bench_output, bench_raw);
    if (oracle->parsed()) return run_oracle(oracle_src, oracle_limit);
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
