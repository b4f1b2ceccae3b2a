#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jobshop/hbfo.hpp"

namespace jobshop {

enum class Algo { bfo, hbfo };
enum class TableFormat { csv, markdown, json };
enum class RefKind { ibfo, optimal };

const char* algo_name(Algo a);
Algo parse_algo(std::string_view name);  // throws InvalidParameter
TableFormat parse_format(std::string_view name);

// One row per benchmark instance, values as printed in the published
// comparison tables. `reference` is the IBFO column for the 10x5/15x5 set
// and the printed "optimal" column elsewhere; stored verbatim, never merged.
struct ReferenceRow {
  const char* instance;
  int jobs;
  int machines;
  int bfo_reported;
  int hbfo_reported;
  int reference;
  RefKind kind;
};

const std::vector<ReferenceRow>& reference_table();
const ReferenceRow* find_reference(std::string_view instance);  // nullptr if absent

struct SummaryRow {
  std::string instance;
  std::string algo;
  int runs = 0;
  int best = 0;
  double mean = 0.0;
  double stdev = 0.0;  // sample (n-1); 0 for a single run
  double mean_evaluations = 0.0;
  double mean_wall_ms = 0.0;  // only ever emitted on marked timing lines
};

struct RunRecord {
  std::string instance;
  std::string algo;
  std::uint64_t seed = 0;
  int best_makespan = 0;
  long long evaluations = 0;
  double wall_ms = 0.0;
  std::vector<int> history;
};

struct BenchConfig {
  std::vector<JsspInstance> instances;
  std::vector<Algo> algos{Algo::bfo, Algo::hbfo};
  int runs = 10;
  std::uint64_t base_seed = 1;
  HbfoParams params;
  // 0: derive the matched default below; < 0: unlimited; > 0: explicit cap.
  long long max_evaluations = 0;
  int workers = 1;
};

// Matched decode ceiling applied to both algorithms: 2*S*N_c*N_re*N_ed,
// about two decodes per bacterium per generation. The baseline move spends
// 1..N_s decodes per bacterium, the hybrid move 2..2*N_s, so this cap binds
// both and makes makespan comparisons budget-fair.
long long default_matched_budget(const BfoParams& p);
long long resolve_budget(const BenchConfig& config);

// runs independent seeded runs (base_seed .. base_seed+runs-1) per
// (instance, algo); deterministic given base_seed, whatever `workers` is.
// Raw per-run records land in *raw (appended in output order) when given.
std::vector<SummaryRow> run_suite(const BenchConfig& config,
                                  std::vector<RunRecord>* raw = nullptr);

struct ComparisonRow {
  SummaryRow summary;
  int jobs = 0;
  int machines = 0;
  int bfo_reported = 0;
  int hbfo_reported = 0;
  int reference = 0;
  RefKind kind = RefKind::optimal;
  double gap_pct = 0.0;            // (best - reference) / reference * 100
  bool hbfo_above_reported_bfo = false;  // regression signal, hbfo rows only
};

std::vector<ComparisonRow> compare_to_reference(const std::vector<SummaryRow>& summary);

// Echoed into every output header so results are self-describing.
struct BenchMeta {
  std::string algos;
  int runs = 0;
  std::uint64_t base_seed = 0;
  long long budget = 0;  // -1 = unlimited
  HbfoParams params;
};

std::string describe_params(const HbfoParams& params);

// Bit-stable for fixed input: CSV uses ',' separator, '.' decimals, LF line
// ends. Wall times appear only on trailing lines marked "# timing" (csv,
// markdown) and are omitted from json.
std::string emit_table(const std::vector<ComparisonRow>& comparison,
                       TableFormat format, const BenchMeta& meta);

// Raw side-channel: one JSON object per line, one line per run.
std::string emit_records_jsonl(const std::vector<RunRecord>& records,
                               const BenchMeta& meta);

// "la-small", "table3", "table4" (published table shapes).
const std::map<std::string, std::vector<std::string>, std::less<>>& suite_registry();
std::vector<JsspInstance> resolve_suite(std::string_view suite_name);

}  // namespace jobshop
