#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jobshop/error.hpp"

namespace jobshop {

// One routing step: job occupies `machine` for `time` units.
struct Step {
  int machine = 0;
  int time = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

// Square JSSP instance: every job visits every machine exactly once.
// Immutable after construction; safe to share across concurrent runs.
struct JsspInstance {
  std::string name;
  int n_jobs = 0;
  int n_machines = 0;
  std::vector<std::vector<Step>> routing;  // [job][op_index]

  int num_operations() const { return n_jobs * n_machines; }

  friend bool operator==(const JsspInstance&, const JsspInstance&) = default;
};

struct OperationRef {
  int job = 0;
  int op_index = 0;

  friend bool operator==(const OperationRef&, const OperationRef&) = default;
};

// Format: optional '#' comment lines, a "n m" header line, then n rows of
// 2*m integers read as (machine, time) pairs in routing order. Tokens are
// separated by any run of spaces/tabs; lines end in LF or CRLF.
JsspInstance parse_instance(std::istream& in, std::string name = "");
JsspInstance parse_instance(std::string_view text, std::string name = "");

// Inverse of parse_instance; emits "# name <name>" so the round trip is the
// identity on the whole value, not just the routing.
std::string serialize_instance(const JsspInstance& inst);

JsspInstance load_instance_file(const std::string& path);

// Embedded OR-Library instances. Names are case-insensitive ("LA05" == "la05").
JsspInstance load_builtin(std::string_view name);
std::vector<std::string> builtin_names();

long long total_work(const JsspInstance& inst);
std::vector<long long> machine_loads(const JsspInstance& inst);
std::vector<long long> job_loads(const JsspInstance& inst);

// max(max machine load, max job load): no feasible makespan is below this.
long long load_lower_bound(const JsspInstance& inst);

namespace detail {
struct BuiltinInstance {
  const char* name;
  const char* text;
};
extern const BuiltinInstance kBuiltinInstances[];
extern const std::size_t kBuiltinInstanceCount;
}  // namespace detail

}  // namespace jobshop
