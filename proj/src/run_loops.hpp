#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "jobshop/bfo.hpp"

namespace jobshop::detail {

// Shared skeleton for both solvers: N_ed x N_re x N_c nested loops around a
// per-bacterium chemotactic move. Dispersal runs between elimination rounds
// only: a trailing dispersal would evaluate bacteria no generation ever uses,
// and a best found there could not appear in the history.
//
// RNG stream order (the reproducibility contract): S initial shuffles, then
// per generation the bacteria in index order (each consuming its move's
// draws), then per dispersal one Bernoulli draw per bacterium in index order
// plus a shuffle per replacement.
//
// make_fitness, when non-null, builds the per-bacterium comparison value for
// move acceptance from a snapshot of the generation's starting positions
// (cell-to-cell coupling); costs no evaluations.
using MakeFitnessFn =
    std::function<FitnessFn(const std::vector<Bacterium>&, std::size_t)>;

template <typename OnGeneration>
RunResult run_loops(const JsspInstance& inst, const BfoParams& params,
                    Rng& rng, Evaluator& evaluator, const MoveFn& move,
                    int move_cost, const OnGeneration& on_generation_end,
                    const MakeFitnessFn* make_fitness = nullptr) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<Bacterium> population;
  population.reserve(static_cast<std::size_t>(params.S));
  for (int i = 0; i < params.S; ++i) {
    Bacterium b;
    b.sequence = random_sequence(inst, rng);
    // A budget below S leaves stragglers unevaluated; park them at a value
    // that can never win.
    b.J = evaluator.remaining() >= 1 ? evaluator.evaluate(b.sequence)
                                     : std::numeric_limits<int>::max() / 2;
    population.push_back(std::move(b));
  }

  RunResult result;
  for (int ed = 0; ed < params.N_ed; ++ed) {
    for (int re = 0; re < params.N_re; ++re) {
      for (int c = 0; c < params.N_c; ++c) {
        // Fitness sees the positions as of the generation start, so the order
        // bacteria move in does not leak into each other's coupling term.
        std::vector<Bacterium> snapshot;
        if (make_fitness) snapshot = population;
        for (std::size_t i = 0; i < population.size(); ++i) {
          FitnessFn fitness;
          if (make_fitness) fitness = (*make_fitness)(snapshot, i);
          population[i] =
              swim(std::move(population[i]), move, params.N_s, move_cost,
                   evaluator, rng, make_fitness ? &fitness : nullptr);
        }
        result.history.push_back(evaluator.best_makespan());
        on_generation_end(evaluator);
      }
      reproduce(population, params.health_mode);
    }
    if (ed + 1 < params.N_ed)
      eliminate_disperse(population, params.p_ed, rng, inst, evaluator);
  }

  result.best_sequence = evaluator.best_sequence();
  result.best_makespan = evaluator.best_makespan();
  result.evaluations = evaluator.count();
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace jobshop::detail
