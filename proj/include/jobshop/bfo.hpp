#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "jobshop/instance.hpp"
#include "jobshop/rng.hpp"
#include "jobshop/schedule.hpp"

namespace jobshop {

enum class HealthMode {
  accumulated,  // sort reproduction by summed makespan over the epoch
  current,      // sort by current J instead
};

struct BfoParams {
  int S = 20;      // population size, even
  int N_c = 50;    // chemotactic generations per reproduction
  int N_s = 4;     // swim length bound
  int N_re = 4;    // reproductions per dispersal round
  int N_ed = 2;    // elimination-dispersal rounds
  double p_ed = 0.25;
  std::uint64_t seed = 0;
  HealthMode health_mode = HealthMode::accumulated;

  void validate() const;  // throws InvalidParameter / OddPopulation
};

struct Bacterium {
  OperationSequence sequence;
  int J = 0;             // makespan of decode(sequence)
  long long J_health = 0;  // accumulated evaluated makespans this epoch
};

struct RunResult {
  OperationSequence best_sequence;
  int best_makespan = 0;
  std::vector<int> history;  // best-so-far after each chemotactic generation
  long long evaluations = 0;
  double wall_time_ms = 0.0;  // measured; excluded from determinism contracts
};

// Counts every decode and tracks the best sequence ever evaluated (ties keep
// the earlier one). A ceiling < 0 means unlimited.
class Evaluator {
 public:
  explicit Evaluator(const JsspInstance& inst, long long max_evaluations = -1);

  int evaluate(const OperationSequence& seq);
  long long count() const { return count_; }
  long long remaining() const;
  const OperationSequence& best_sequence() const { return best_seq_; }
  int best_makespan() const { return best_J_; }
  bool has_best() const { return !best_seq_.empty(); }

 private:
  const JsspInstance* inst_;
  long long max_;
  long long count_ = 0;
  OperationSequence best_seq_;
  int best_J_ = std::numeric_limits<int>::max();
};

// A chemotactic move: produce one evaluated candidate from the incumbent.
// `health_delta` carries every makespan evaluated while producing it (the
// hybrid move evaluates two candidates per trial).
struct MoveOutcome {
  OperationSequence sequence;
  int J = 0;
  long long health_delta = 0;
};
using MoveFn = std::function<MoveOutcome(const Bacterium&, Evaluator&, Rng&)>;

// Comparison value for move acceptance. Absent (the default everywhere but
// swarming-enabled hybrid runs) comparisons are plain integer makespans.
using FitnessFn = std::function<double(const OperationSequence& seq, int J)>;

OperationSequence random_sequence(const JsspInstance& inst, Rng& rng);

// Swap two uniformly drawn positions holding different job tokens; the
// identity when no such pair exists (single-job instances).
OperationSequence tumble_random(const OperationSequence& seq, Rng& rng);

// Up to N_s trials of `move` (each costing move_cost evaluations); accept
// strict improvements, stop at the first non-improving trial or when the
// evaluator cannot afford another trial. Returns the best bacterium visited.
Bacterium swim(Bacterium b, const MoveFn& move, int N_s, int move_cost,
               Evaluator& evaluator, Rng& rng,
               const FitnessFn* fitness = nullptr);

// Sort by health ascending (stable), kill the worst half, duplicate the best
// half, zero every J_health for the new epoch.
void reproduce(std::vector<Bacterium>& population, HealthMode mode);

// Independent Bernoulli(p_ed) per bacterium: replace with a fresh random
// bacterium, J re-evaluated. Skips replacements the evaluator cannot afford.
void eliminate_disperse(std::vector<Bacterium>& population, double p_ed,
                        Rng& rng, const JsspInstance& inst, Evaluator& evaluator);

// Baseline run: N_ed x N_re x N_c nested loops, tumble_random + swim as the
// chemotactic move. Deterministic given params.seed (wall_time_ms aside).
RunResult run_bfo(const JsspInstance& inst, const BfoParams& params,
                  long long max_evaluations = -1);

}  // namespace jobshop
