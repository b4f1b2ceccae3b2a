#pragma once

#include <string>
#include <vector>

#include "jobshop/instance.hpp"

namespace jobshop {

// Job-repetition encoding: a token list where the k-th occurrence of job j
// means operation (j, k). Every list in which each job appears exactly
// n_machines times decodes to a feasible schedule; the encoding cannot
// dead-lock.
using OperationSequence = std::vector<int>;

bool sequence_counts_ok(const OperationSequence& seq, const JsspInstance& inst);

struct OpTimes {
  int start = 0;
  int completion = 0;

  friend bool operator==(const OpTimes&, const OpTimes&) = default;
};

struct Schedule {
  std::vector<std::vector<OpTimes>> times;  // [job][op_index]
  int makespan = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Semi-active decoding: walk the tokens in order, start each operation at
// max(its job's ready time, its machine's ready time). Pure function.
Schedule decode(const OperationSequence& seq, const JsspInstance& inst);

struct Violation {
  std::string constraint;  // "precedence" | "capacity" | "arithmetic"
  OperationRef a;
  OperationRef b;        // second operation for capacity; == a otherwise
  std::string detail;    // human-readable, includes the offending times
};

// Empty iff precedence, capacity, and completion arithmetic all hold.
// Violations are data, not errors.
std::vector<Violation> validate_schedule(const Schedule& sched,
                                         const JsspInstance& inst);

// Number of distinct token lists, saturating at limit+1 so callers can test
// "> limit" without overflow.
long long count_distinct_sequences(const JsspInstance& inst, long long limit);

// Exact minimum makespan by enumerating every distinct sequence. Refuses
// (TooLarge) when the enumeration would exceed `limit` decodes; meant for
// instances up to about 3x3 (1680 sequences).
int brute_force_optimal(const JsspInstance& inst, long long limit = 2000000);

// One object per operation: {job, op_index, machine, start, completion},
// plus the makespan. Consumed by --dump-schedule and the Gantt emitter.
std::string schedule_to_json(const Schedule& sched, const JsspInstance& inst);

}  // namespace jobshop
