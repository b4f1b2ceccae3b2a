#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jobshop/bfo.hpp"
#include "jobshop/pheromone.hpp"

namespace jobshop {

struct SwarmingParams {
  double M = 1.0;    // signal magnitude, >= 0
  double w_a = 1.0;  // attractant width, > 0
  double w_r = 1.0;  // repellent width, > 0

  void validate() const;
};

struct HbfoParams {
  BfoParams bfo;
  AcoParams aco;
  std::optional<SwarmingParams> swarming;  // absent = no swarming term

  void validate() const;
};

// Build a full sequence token by token: the eligible set is the next
// unscheduled operation of every unfinished job; each step draws q and
// roulette_draw (both always consumed, keeping the stream aligned), applies
// the state-transition rule, then the local pheromone update on the chosen
// cell.
OperationSequence construct_sequence(const JsspInstance& inst,
                                     PheromoneModel& model, Rng& rng);

// The hybrid chemotactic move: Tumble and Move each construct a candidate,
// the smaller-makespan candidate (ties to the first) competes against the
// incumbent, and swimming keeps drawing fresh pairs while strictly improving.
Bacterium tumble_move_swim(const Bacterium& b, const JsspInstance& inst,
                           PheromoneModel& model, const HbfoParams& params,
                           Evaluator& evaluator, Rng& rng);

// Cell-to-cell signaling value for bacterium `self_index` against the whole
// population; distance is Hamming over tokens, normalized by length.
// Throws SwarmingDisabled when `params` is absent. w_a == w_r gives exactly 0.
double compute_swarming(const std::vector<OperationSequence>& positions,
                        std::size_t self_index,
                        const std::optional<SwarmingParams>& params);

// Same loop skeleton as run_bfo with tumble_move_swim as the move, one
// pheromone model persisted across the whole run, and the global update
// applied once per chemotactic generation with the best-ever sequence.
// final_model, when given, receives the pheromone state after the last
// generation (inspection/dump hook).
RunResult run_hbfo(const JsspInstance& inst, const HbfoParams& params,
                   long long max_evaluations = -1,
                   PheromoneModel* final_model = nullptr);

}  // namespace jobshop
