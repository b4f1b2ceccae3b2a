#include "jobshop/hbfo.hpp"

#include <cmath>
#include <vector>

#include "run_loops.hpp"

namespace jobshop {

void SwarmingParams::validate() const {
  if (!(M >= 0.0)) fail(Errc::invalid_parameter, "swarming M must be >= 0");
  if (!(w_a > 0.0)) fail(Errc::invalid_parameter, "attractant width must be > 0");
  if (!(w_r > 0.0)) fail(Errc::invalid_parameter, "repellent width must be > 0");
}

void HbfoParams::validate() const {
  bfo.validate();
  aco.validate();
  if (swarming) swarming->validate();
}

OperationSequence construct_sequence(const JsspInstance& inst,
                                     PheromoneModel& model, Rng& rng) {
  const std::size_t total = static_cast<std::size_t>(inst.num_operations());
  OperationSequence seq;
  seq.reserve(total);
  std::vector<int> next_op(static_cast<std::size_t>(inst.n_jobs), 0);

  std::vector<EligibleChoice> eligible;
  eligible.reserve(static_cast<std::size_t>(inst.n_jobs));
  while (seq.size() < total) {
    eligible.clear();
    for (int j = 0; j < inst.n_jobs; ++j) {
      const int k = next_op[static_cast<std::size_t>(j)];
      if (k >= inst.n_machines) continue;
      const Step step = inst.routing[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      eligible.push_back(EligibleChoice{{j, k}, model.tau(j, k), desirability(step.time)});
    }
    // Both draws happen whichever branch wins, so the stream position does
    // not depend on branch history.
    const double q = rng.uniform_double();
    const double roulette = rng.uniform_double();
    const OperationRef chosen = select_next(model, eligible, q, roulette);
    model.local_update(chosen);
    seq.push_back(chosen.job);
    ++next_op[static_cast<std::size_t>(chosen.job)];
  }
  return seq;
}

namespace {

double hamming_distance(const OperationSequence& a, const OperationSequence& b) {
  if (a.empty() || a.size() != b.size()) return 0.0;
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return static_cast<double>(diff) / static_cast<double>(a.size());
}

}  // namespace

double compute_swarming(const std::vector<OperationSequence>& positions,
                        std::size_t self_index,
                        const std::optional<SwarmingParams>& params) {
  if (!params)
    fail(Errc::swarming_disabled, "swarming term requested while disabled");
  if (self_index >= positions.size())
    fail(Errc::index_out_of_range, "self index " + std::to_string(self_index));

  double attract = 0.0;
  double repel = 0.0;
  for (const auto& other : positions) {
    const double d = hamming_distance(positions[self_index], other);
    attract += std::exp(-params->w_a * d * d);
    repel += std::exp(-params->w_r * d * d);
  }
  return -params->M * (attract - repel);
}

namespace {

// Chemotactic move: construct two fresh pheromone-guided sequences (Tumble
// then Move), keep the smaller makespan, ties keep the first.
MoveFn pair_construction_move(const JsspInstance& inst, PheromoneModel& model) {
  return [&inst, &model](const Bacterium&, Evaluator& ev, Rng& r) {
    OperationSequence first = construct_sequence(inst, model, r);
    const int J_first = ev.evaluate(first);
    OperationSequence second = construct_sequence(inst, model, r);
    const int J_second = ev.evaluate(second);
    MoveOutcome out;
    out.health_delta = static_cast<long long>(J_first) + J_second;
    if (J_second < J_first) {
      out.sequence = std::move(second);
      out.J = J_second;
    } else {
      out.sequence = std::move(first);
      out.J = J_first;
    }
    return out;
  };
}

}  // namespace

Bacterium tumble_move_swim(const Bacterium& b, const JsspInstance& inst,
                           PheromoneModel& model, const HbfoParams& params,
                           Evaluator& evaluator, Rng& rng) {
  const MoveFn move = pair_construction_move(inst, model);
  return swim(b, move, params.bfo.N_s, /*move_cost=*/2, evaluator, rng);
}

RunResult run_hbfo(const JsspInstance& inst, const HbfoParams& params,
                   long long max_evaluations, PheromoneModel* final_model) {
  params.validate();
  Rng rng(params.bfo.seed);
  Evaluator evaluator(inst, max_evaluations);
  PheromoneModel model = init_pheromone(inst, params.aco);

  const MoveFn move = pair_construction_move(inst, model);

  // Swarming (off by default) biases move acceptance by the cell-to-cell term
  // computed against the generation-start positions; recorded makespans are
  // untouched.
  detail::MakeFitnessFn make_fitness;
  if (params.swarming) {
    make_fitness = [&params](const std::vector<Bacterium>& snapshot,
                             std::size_t self) {
      std::vector<OperationSequence> positions;
      positions.reserve(snapshot.size());
      for (const auto& b : snapshot) positions.push_back(b.sequence);
      return [positions, self, &params](const OperationSequence& seq,
                                        int J) mutable {
        positions[self] = seq;
        return static_cast<double>(J) +
               compute_swarming(positions, self, params.swarming);
      };
    };
  }

  RunResult result = detail::run_loops(
      inst, params.bfo, rng, evaluator, move, /*move_cost=*/2,
      [&model](const Evaluator& ev) {
        if (ev.has_best()) model.global_update(ev.best_sequence(), ev.best_makespan());
      },
      params.swarming ? &make_fitness : nullptr);
  if (final_model) *final_model = model;
  return result;
}

}  // namespace jobshop
