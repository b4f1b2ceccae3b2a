#include "jobshop/bfo.hpp"

#include <algorithm>

#include "run_loops.hpp"

namespace jobshop {

void BfoParams::validate() const {
  if (S < 2) fail(Errc::invalid_parameter, "S must be >= 2");
  if (S % 2 != 0) fail(Errc::odd_population, "S must be even");
  if (N_c < 1 || N_s < 1 || N_re < 1 || N_ed < 1)
    fail(Errc::invalid_parameter, "N_c, N_s, N_re, N_ed must be >= 1");
  if (!(p_ed >= 0.0 && p_ed <= 1.0))
    fail(Errc::invalid_parameter, "p_ed must lie in [0,1]");
}

Evaluator::Evaluator(const JsspInstance& inst, long long max_evaluations)
    : inst_(&inst), max_(max_evaluations) {}

int Evaluator::evaluate(const OperationSequence& seq) {
  const int makespan = decode(seq, *inst_).makespan;
  ++count_;
  if (makespan < best_J_) {
    best_J_ = makespan;
    best_seq_ = seq;
  }
  return makespan;
}

long long Evaluator::remaining() const {
  if (max_ < 0) return std::numeric_limits<long long>::max();
  return std::max(0LL, max_ - count_);
}

OperationSequence random_sequence(const JsspInstance& inst, Rng& rng) {
  OperationSequence seq;
  seq.reserve(static_cast<std::size_t>(inst.num_operations()));
  for (int j = 0; j < inst.n_jobs; ++j)
    for (int k = 0; k < inst.n_machines; ++k) seq.push_back(j);
  rng.shuffle(seq);
  return seq;
}

OperationSequence tumble_random(const OperationSequence& seq, Rng& rng) {
  // On single-job instances no pair of positions holds different jobs.
  const bool uniform =
      std::all_of(seq.begin(), seq.end(), [&](int j) { return j == seq[0]; });
  if (seq.size() < 2 || uniform) return seq;

  OperationSequence out = seq;
  const int last = static_cast<int>(out.size()) - 1;
  int a, b;
  do {
    a = rng.uniform_int(0, last);
    b = rng.uniform_int(0, last);
  } while (out[static_cast<std::size_t>(a)] == out[static_cast<std::size_t>(b)]);
  std::swap(out[static_cast<std::size_t>(a)], out[static_cast<std::size_t>(b)]);
  return out;
}

Bacterium swim(Bacterium b, const MoveFn& move, int N_s, int move_cost,
               Evaluator& evaluator, Rng& rng, const FitnessFn* fitness) {
  for (int step = 0; step < N_s; ++step) {
    if (evaluator.remaining() < move_cost) break;
    MoveOutcome outcome = move(b, evaluator, rng);
    b.J_health += outcome.health_delta;
    // Without a fitness hook acceptance compares raw integer makespans; the
    // hook only changes which candidate wins, never the recorded J values.
    const bool better =
        fitness ? (*fitness)(outcome.sequence, outcome.J) <
                      (*fitness)(b.sequence, b.J)
                : outcome.J < b.J;
    if (better) {
      b.sequence = std::move(outcome.sequence);
      b.J = outcome.J;
    } else {
      break;  // first non-improving trial ends the swim
    }
  }
  return b;
}

void reproduce(std::vector<Bacterium>& population, HealthMode mode) {
  if (population.size() % 2 != 0)
    fail(Errc::odd_population,
         "population size " + std::to_string(population.size()) + " is odd");

  // Stable sort: health ties keep index order, so runs stay deterministic.
  std::stable_sort(population.begin(), population.end(),
                   [mode](const Bacterium& a, const Bacterium& b) {
                     if (mode == HealthMode::current) return a.J < b.J;
                     return a.J_health < b.J_health;
                   });
  const std::size_t half = population.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    population[i].J_health = 0;
    population[half + i] = population[i];
  }
}

void eliminate_disperse(std::vector<Bacterium>& population, double p_ed,
                        Rng& rng, const JsspInstance& inst, Evaluator& evaluator) {
  for (auto& b : population) {
    if (evaluator.remaining() < 1) break;
    if (rng.uniform_double() < p_ed) {
      b.sequence = random_sequence(inst, rng);
      b.J = evaluator.evaluate(b.sequence);
      b.J_health = 0;
    }
  }
}

RunResult run_bfo(const JsspInstance& inst, const BfoParams& params,
                  long long max_evaluations) {
  Rng rng(params.seed);
  Evaluator evaluator(inst, max_evaluations);
  const MoveFn move = [](const Bacterium& b, Evaluator& ev, Rng& r) {
    MoveOutcome out;
    out.sequence = tumble_random(b.sequence, r);
    out.J = ev.evaluate(out.sequence);
    out.health_delta = out.J;
    return out;
  };
  return detail::run_loops(inst, params, rng, evaluator, move, /*move_cost=*/1,
                           [](const Evaluator&) {});
}

}  // namespace jobshop
