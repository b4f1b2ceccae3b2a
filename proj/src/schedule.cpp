#include "jobshop/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace jobshop {

bool sequence_counts_ok(const OperationSequence& seq, const JsspInstance& inst) {
  if (seq.size() != static_cast<std::size_t>(inst.num_operations())) return false;
  std::vector<int> counts(static_cast<std::size_t>(inst.n_jobs), 0);
  for (int job : seq) {
    if (job < 0 || job >= inst.n_jobs) return false;
    ++counts[static_cast<std::size_t>(job)];
  }
  return std::all_of(counts.begin(), counts.end(),
                     [&](int c) { return c == inst.n_machines; });
}

Schedule decode(const OperationSequence& seq, const JsspInstance& inst) {
  if (!sequence_counts_ok(seq, inst))
    fail(Errc::count_mismatch,
         "sequence is not a job-repetition permutation of this instance");

  Schedule sched;
  sched.times.assign(static_cast<std::size_t>(inst.n_jobs),
                     std::vector<OpTimes>(static_cast<std::size_t>(inst.n_machines)));
  std::vector<int> next_op(static_cast<std::size_t>(inst.n_jobs), 0);
  std::vector<int> job_ready(static_cast<std::size_t>(inst.n_jobs), 0);
  std::vector<int> machine_ready(static_cast<std::size_t>(inst.n_machines), 0);

  for (int job : seq) {
    const auto j = static_cast<std::size_t>(job);
    const int k = next_op[j]++;
    const Step step = inst.routing[j][static_cast<std::size_t>(k)];
    const auto mach = static_cast<std::size_t>(step.machine);
    const int start = std::max(job_ready[j], machine_ready[mach]);
    const int completion = start + step.time;
    sched.times[j][static_cast<std::size_t>(k)] = OpTimes{start, completion};
    job_ready[j] = completion;
    machine_ready[mach] = completion;
    sched.makespan = std::max(sched.makespan, completion);
  }
  return sched;
}

std::vector<Violation> validate_schedule(const Schedule& sched,
                                         const JsspInstance& inst) {
  std::vector<Violation> out;
  auto times_of = [&](int j, int k) -> const OpTimes& {
    return sched.times[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  };

  int max_completion = 0;
  for (int j = 0; j < inst.n_jobs; ++j) {
    for (int k = 0; k < inst.n_machines; ++k) {
      const OpTimes& t = times_of(j, k);
      max_completion = std::max(max_completion, t.completion);
      if (t.start < 0) {
        std::ostringstream msg;
        msg << "op (" << j << "," << k << "): start " << t.start << " < 0";
        out.push_back(Violation{"arithmetic", {j, k}, {j, k}, msg.str()});
      }
      const int p = inst.routing[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].time;
      if (t.completion != t.start + p) {
        std::ostringstream msg;
        msg << "op (" << j << "," << k << "): completion " << t.completion
            << " != start " << t.start << " + " << p;
        out.push_back(Violation{"arithmetic", {j, k}, {j, k}, msg.str()});
      }
      if (k > 0 && t.start < times_of(j, k - 1).completion) {
        std::ostringstream msg;
        msg << "job " << j << ": op " << k << " starts at " << t.start
            << " before op " << (k - 1) << " completes at "
            << times_of(j, k - 1).completion;
        out.push_back(Violation{"precedence", {j, k}, {j, k - 1}, msg.str()});
      }
    }
  }

  // Capacity: sort each machine's intervals by start, adjacent pairs must
  // not overlap (zero-length intervals may share an instant).
  for (int m = 0; m < inst.n_machines; ++m) {
    struct Iv {
      int start, completion, job, op;
    };
    std::vector<Iv> ivs;
    for (int j = 0; j < inst.n_jobs; ++j)
      for (int k = 0; k < inst.n_machines; ++k)
        if (inst.routing[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].machine == m)
          ivs.push_back(Iv{times_of(j, k).start, times_of(j, k).completion, j, k});
    std::sort(ivs.begin(), ivs.end(), [](const Iv& a, const Iv& b) {
      return a.start != b.start ? a.start < b.start
                                : a.completion < b.completion;
    });
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      if (ivs[i].start < ivs[i - 1].completion) {
        std::ostringstream msg;
        msg << "machine " << m << ": op (" << ivs[i - 1].job << ","
            << ivs[i - 1].op << ") [" << ivs[i - 1].start << ","
            << ivs[i - 1].completion << ") overlaps op (" << ivs[i].job << ","
            << ivs[i].op << ") [" << ivs[i].start << "," << ivs[i].completion
            << ")";
        out.push_back(Violation{"capacity",
                                {ivs[i - 1].job, ivs[i - 1].op},
                                {ivs[i].job, ivs[i].op},
                                msg.str()});
      }
    }
  }

  if (sched.makespan != max_completion) {
    std::ostringstream msg;
    msg << "makespan " << sched.makespan << " != max completion "
        << max_completion;
    out.push_back(Violation{"makespan", {0, 0}, {0, 0}, msg.str()});
  }
  return out;
}

long long count_distinct_sequences(const JsspInstance& inst, long long limit) {
  // (n*m)! / (m!)^n, built as a product of binomials so every intermediate
  // value is integral; saturates at limit+1. Caller limits must stay below
  // the 4e15 pre-multiply guard.
  constexpr long long kSafe = 4'000'000'000'000'000LL;
  long long count = 1;
  long long placed = 0;
  for (int j = 0; j < inst.n_jobs; ++j) {
    for (int k = 1; k <= inst.n_machines; ++k) {
      ++placed;
      if (count > kSafe / placed) return limit + 1;
      count = count * placed / k;
      if (count > limit) return limit + 1;
    }
  }
  return count;
}

int brute_force_optimal(const JsspInstance& inst, long long limit) {
  const long long n_seq = count_distinct_sequences(inst, limit);
  if (n_seq > limit)
    fail(Errc::too_large, "instance has more than " + std::to_string(limit) +
                              " distinct sequences");

  OperationSequence seq;
  seq.reserve(static_cast<std::size_t>(inst.num_operations()));
  for (int j = 0; j < inst.n_jobs; ++j)
    for (int k = 0; k < inst.n_machines; ++k) seq.push_back(j);

  int best = decode(seq, inst).makespan;
  while (std::next_permutation(seq.begin(), seq.end()))
    best = std::min(best, decode(seq, inst).makespan);
  return best;
}

std::string schedule_to_json(const Schedule& sched, const JsspInstance& inst) {
  std::ostringstream out;
  out << "{\"makespan\": " << sched.makespan << ", \"operations\": [";
  bool first = true;
  for (int j = 0; j < inst.n_jobs; ++j) {
    for (int k = 0; k < inst.n_machines; ++k) {
      const OpTimes& t = sched.times[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const Step step = inst.routing[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (!first) out << ", ";
      first = false;
      out << "{\"job\": " << j << ", \"op_index\": " << k
          << ", \"machine\": " << step.machine << ", \"start\": " << t.start
          << ", \"completion\": " << t.completion << "}";
    }
  }
  out << "]}";
  return out.str();
}

}  // namespace jobshop
