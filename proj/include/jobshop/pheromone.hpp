#pragma once

#include <Eigen/Core>
#include <vector>

#include "jobshop/instance.hpp"
#include "jobshop/schedule.hpp"

namespace jobshop {

struct AcoParams {
  double alpha = 0.1;  // global decay, in (0,1)
  double beta = 1.0;   // desirability exponent, >= 0
  double rho = 0.1;    // local evaporation, in [0,1]
  double q0 = 0.8;     // exploitation threshold, in (0,1)
  double tau0 = 0.5;   // initial pheromone, > 0

  void validate() const;  // throws InvalidParameter
};

// eta = 1 / max(1, p): inverse processing time, guarded for p = 0.
double desirability(int processing_time);

struct EligibleChoice {
  OperationRef op;
  double tau = 0.0;
  double eta = 0.0;
};

// tau over (job, op_index) cells. Owned by exactly one solver run; all
// entries stay strictly positive under any interleaving of the updates.
class PheromoneModel {
 public:
  PheromoneModel(const JsspInstance& inst, const AcoParams& params);

  int n_jobs() const { return static_cast<int>(tau_.rows()); }
  int n_machines() const { return static_cast<int>(tau_.cols()); }
  const AcoParams& params() const { return params_; }

  double tau(int job, int op_index) const;
  const Eigen::ArrayXXd& matrix() const { return tau_; }
  Eigen::ArrayXXd& matrix() { return tau_; }

  // tau <- (1-rho)*tau + rho*tau0 on one cell (the just-chosen step).
  void local_update(OperationRef op);

  // tau <- (1-alpha)*tau + alpha*dtau, dtau = 1/best_makespan on cells the
  // sequence visits and 0 elsewhere. The token list may be partial; only
  // visited (job, occurrence) cells get the deposit.
  void global_update(const OperationSequence& best_sequence, int best_makespan);

  // CSV dump, one row per job, columns = op_index.
  std::string to_csv() const;

 private:
  Eigen::ArrayXXd tau_;
  AcoParams params_;
};

PheromoneModel init_pheromone(const JsspInstance& inst, const AcoParams& params);

// State transition rule. q <= q0: argmax of tau*eta^beta (ties to the lowest
// job index). Otherwise: inverse-CDF sample of the normalized tau*eta^beta
// distribution at roulette_draw. Pure in (model.params, eligible, q, draw).
OperationRef select_next(const PheromoneModel& model,
                         const std::vector<EligibleChoice>& eligible,
                         double q, double roulette_draw);

// Test hook: the exploration-branch probabilities, in eligible order.
std::vector<double> selection_distribution(const PheromoneModel& model,
                                           const std::vector<EligibleChoice>& eligible);

}  // namespace jobshop
