#include "jobshop/pheromone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace jobshop {

void AcoParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0))
    fail(Errc::invalid_parameter, "alpha must lie in (0,1)");
  if (!(beta >= 0.0)) fail(Errc::invalid_parameter, "beta must be >= 0");
  if (!(rho >= 0.0 && rho <= 1.0))
    fail(Errc::invalid_parameter, "rho must lie in [0,1]");
  if (!(q0 > 0.0 && q0 < 1.0))
    fail(Errc::invalid_parameter, "q0 must lie in (0,1)");
  if (!(tau0 > 0.0)) fail(Errc::invalid_parameter, "tau0 must be > 0");
}

double desirability(int processing_time) {
  return 1.0 / static_cast<double>(std::max(1, processing_time));
}

PheromoneModel::PheromoneModel(const JsspInstance& inst, const AcoParams& params)
    : tau_(Eigen::ArrayXXd::Constant(inst.n_jobs, inst.n_machines, params.tau0)),
      params_(params) {
  params.validate();
}

double PheromoneModel::tau(int job, int op_index) const {
  if (job < 0 || job >= n_jobs() || op_index < 0 || op_index >= n_machines())
    fail(Errc::index_out_of_range,
         "cell (" + std::to_string(job) + "," + std::to_string(op_index) + ")");
  return tau_(job, op_index);
}

void PheromoneModel::local_update(OperationRef op) {
  if (op.job < 0 || op.job >= n_jobs() || op.op_index < 0 ||
      op.op_index >= n_machines())
    fail(Errc::index_out_of_range,
         "cell (" + std::to_string(op.job) + "," + std::to_string(op.op_index) + ")");
  double& cell = tau_(op.job, op.op_index);
  cell = (1.0 - params_.rho) * cell + params_.rho * params_.tau0;
}

void PheromoneModel::global_update(const OperationSequence& best_sequence,
                                   int best_makespan) {
  if (best_makespan <= 0)
    fail(Errc::invalid_parameter, "global update needs a positive makespan");

  // Visited cells from the token list: k-th occurrence of job j is (j, k).
  Eigen::ArrayXXd visited = Eigen::ArrayXXd::Zero(tau_.rows(), tau_.cols());
  std::vector<int> occurrence(static_cast<std::size_t>(n_jobs()), 0);
  for (int job : best_sequence) {
    if (job < 0 || job >= n_jobs())
      fail(Errc::index_out_of_range, "token " + std::to_string(job));
    const int k = occurrence[static_cast<std::size_t>(job)]++;
    if (k >= n_machines())
      fail(Errc::index_out_of_range,
           "job " + std::to_string(job) + " appears more than " +
               std::to_string(n_machines()) + " times");
    visited(job, k) = 1.0;
  }

  const double alpha = params_.alpha;
  const double deposit = 1.0 / static_cast<double>(best_makespan);
  tau_ = (1.0 - alpha) * tau_ + alpha * deposit * visited;
}

std::string PheromoneModel::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index j = 0; j < tau_.rows(); ++j) {
    for (Eigen::Index k = 0; k < tau_.cols(); ++k) {
      if (k) out << ",";
      out << tau_(j, k);
    }
    out << "\n";
  }
  return out.str();
}

PheromoneModel init_pheromone(const JsspInstance& inst, const AcoParams& params) {
  return PheromoneModel(inst, params);
}

namespace {

double score(const PheromoneModel& model, const EligibleChoice& c) {
  return c.tau * std::pow(c.eta, model.params().beta);
}

}  // namespace

OperationRef select_next(const PheromoneModel& model,
                         const std::vector<EligibleChoice>& eligible,
                         double q, double roulette_draw) {
  if (eligible.empty()) fail(Errc::empty_eligible_set, "no eligible operations");

  if (q <= model.params().q0) {
    // Exploitation: argmax of tau*eta^beta, ties to the lowest job index.
    std::size_t best = 0;
    double best_score = score(model, eligible[0]);
    for (std::size_t i = 1; i < eligible.size(); ++i) {
      const double s = score(model, eligible[i]);
      if (s > best_score ||
          (s == best_score && eligible[i].op.job < eligible[best].op.job)) {
        best = i;
        best_score = s;
      }
    }
    return eligible[best].op;
  }

  // Biased exploration: inverse CDF of the normalized scores. A draw exactly
  // on a CDF boundary belongs to the earlier cell.
  const std::vector<double> probs = selection_distribution(model, eligible);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    cumulative += probs[i];
    if (roulette_draw <= cumulative) return eligible[i].op;
  }
  return eligible.back().op;  // draw landed in the rounding tail
}

std::vector<double> selection_distribution(const PheromoneModel& model,
                                           const std::vector<EligibleChoice>& eligible) {
  if (eligible.empty()) fail(Errc::empty_eligible_set, "no eligible operations");
  std::vector<double> probs(eligible.size());
  double total = 0.0;
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    probs[i] = score(model, eligible[i]);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

}  // namespace jobshop
