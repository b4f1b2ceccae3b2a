#include "jobshop/schedule.hpp"

#include <algorithm>

#include "doctest.h"
#include "jobshop/rng.hpp"

using namespace jobshop;

namespace {

const char* kToy2x2 = "2 2\n0 3 1 2\n1 2 0 4";

JsspInstance random_instance(Rng& rng, int max_jobs, int max_machines) {
  const int n = rng.uniform_int(1, max_jobs);
  const int m = rng.uniform_int(1, max_machines);
  JsspInstance inst;
  inst.name = "random";
  inst.n_jobs = n;
  inst.n_machines = m;
  inst.routing.resize(static_cast<std::size_t>(n));
  std::vector<int> machines(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) machines[static_cast<std::size_t>(k)] = k;
  for (auto& route : inst.routing) {
    rng.shuffle(machines);
    for (int k = 0; k < m; ++k)
      route.push_back(Step{machines[static_cast<std::size_t>(k)], rng.uniform_int(1, 9)});
  }
  return inst;
}

OperationSequence random_seq(const JsspInstance& inst, Rng& rng) {
  OperationSequence seq;
  for (int j = 0; j < inst.n_jobs; ++j)
    for (int k = 0; k < inst.n_machines; ++k) seq.push_back(j);
  rng.shuffle(seq);
  return seq;
}

}  // namespace

TEST_CASE("decode walks the toy instance as expected") {
  const JsspInstance inst = parse_instance(kToy2x2);
  const Schedule sched = decode({0, 1, 0, 1}, inst);
  // job0 op0 on M0 [0,3); job1 op0 on M1 [0,2); job0 op1 on M1 [3,5);
  // job1 op1 on M0 [3,7): machine ready at 3 beats job ready at 2.
  CHECK(sched.times[0][0] == OpTimes{0, 3});
  CHECK(sched.times[1][0] == OpTimes{0, 2});
  CHECK(sched.times[0][1] == OpTimes{3, 5});
  CHECK(sched.times[1][1] == OpTimes{3, 7});
  CHECK(sched.makespan == 7);
}

TEST_CASE("decode order matters") {
  const JsspInstance inst = parse_instance(kToy2x2);
  CHECK(decode({0, 0, 1, 1}, inst).makespan == 11);
  CHECK(decode({1, 1, 0, 0}, inst).makespan == 11);
  CHECK(decode({1, 0, 1, 0}, inst).makespan == 7);
}

TEST_CASE("decode rejects bad sequences") {
  const JsspInstance inst = parse_instance(kToy2x2);
  CHECK(!sequence_counts_ok({0, 0, 0, 1}, inst));
  CHECK(!sequence_counts_ok({0, 1, 0}, inst));
  CHECK(sequence_counts_ok({1, 0, 1, 0}, inst));
  for (const OperationSequence bad :
       {OperationSequence{0, 0, 0, 1}, OperationSequence{0, 1, 0},
        OperationSequence{0, 1, 0, 2}}) {
    try {
      decode(bad, inst);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::count_mismatch);
    }
  }
}

TEST_CASE("validate_schedule accepts decoded schedules and spots tampering") {
  const JsspInstance inst = parse_instance(kToy2x2);
  Schedule sched = decode({0, 1, 0, 1}, inst);
  CHECK(validate_schedule(sched, inst).empty());

  SUBCASE("wrong duration") {
    sched.times[0][0].completion = 2;
    CHECK(!validate_schedule(sched, inst).empty());
  }
  SUBCASE("precedence broken") {
    sched.times[0][1] = {1, 3};  // starts before op0 completes
    CHECK(!validate_schedule(sched, inst).empty());
  }
  SUBCASE("machine overlap") {
    sched.times[1][1] = {2, 6};  // collides with job0 op0 on M0
    CHECK(!validate_schedule(sched, inst).empty());
  }
  SUBCASE("negative start") {
    sched.times[1][0] = {-2, 0};
    CHECK(!validate_schedule(sched, inst).empty());
  }
  SUBCASE("stale makespan") {
    sched.makespan = 99;
    CHECK(!validate_schedule(sched, inst).empty());
  }
}

TEST_CASE("distinct sequence counting") {
  const JsspInstance toy = parse_instance(kToy2x2);
  CHECK(count_distinct_sequences(toy, 1000) == 6);
  CHECK(count_distinct_sequences(parse_instance("1 1\n0 5"), 1000) == 1);
  // 3x3: 9!/(3!3!3!) = 1680.
  const JsspInstance cube = parse_instance(
      "3 3\n0 1 1 2 2 3\n1 2 2 1 0 3\n2 2 0 1 1 4");
  CHECK(count_distinct_sequences(cube, 2000) == 1680);
  // Saturates at limit+1 instead of counting past the cap.
  CHECK(count_distinct_sequences(cube, 100) == 101);
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_optimal(parse_instance("1 1\n0 5")) == 5);
  CHECK(brute_force_optimal(parse_instance(kToy2x2)) == 7);

  const JsspInstance cube = parse_instance(
      "3 3\n0 1 1 2 2 3\n1 2 2 1 0 3\n2 2 0 1 1 4");
  CHECK_NOTHROW(brute_force_optimal(cube, 1680));
  try {
    brute_force_optimal(cube, 1679);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
  try {
    brute_force_optimal(load_builtin("la01"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
}

TEST_CASE("oracle result is a lower bound over enumeration") {
  // Every distinct sequence of the toy decodes to >= the oracle value.
  const JsspInstance inst = parse_instance(kToy2x2);
  const int opt = brute_force_optimal(inst);
  OperationSequence seq = {0, 0, 1, 1};
  int seen_opt = 0;
  do {
    if (!sequence_counts_ok(seq, inst)) continue;
    const int ms = decode(seq, inst).makespan;
    CHECK(ms >= opt);
    seen_opt += ms == opt;
  } while (std::next_permutation(seq.begin(), seq.end()));
  CHECK(seen_opt > 0);
}

TEST_CASE("random sequences always decode to valid schedules") {
  Rng rng(20260814);
  for (int trial = 0; trial < 2000; ++trial) {
    const JsspInstance inst = random_instance(rng, 5, 5);
    const OperationSequence seq = random_seq(inst, rng);
    const Schedule sched = decode(seq, inst);
    CHECK(validate_schedule(sched, inst).empty());
    CHECK(sched.makespan >= load_lower_bound(inst));
  }
}

TEST_CASE("schedule json carries the makespan and every operation") {
  const JsspInstance inst = parse_instance(kToy2x2);
  const Schedule sched = decode({0, 1, 0, 1}, inst);
  const std::string json = schedule_to_json(sched, inst);
  CHECK(json.find("\"makespan\": 7") != std::string::npos);
  CHECK(json.find("\"job\": 1") != std::string::npos);
  CHECK(json.find("\"machine\": 0") != std::string::npos);
}
