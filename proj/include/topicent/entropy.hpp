#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "topicent/kernels.hpp"
#include "topicent/model.hpp"

namespace topicent {

using kernels::HighProbStats;

/// Thermodynamic diagnostics of one topic solution.
struct EntropyPoint {
  std::size_t topics = 0;
  std::size_t vocab_size = 0;
  /// Count of entries above 1/N. Real-valued because run-averaged points
  /// carry the mean count.
  double n_high = 0.0;
  double prob_mass = 0.0;
  double rho = 0.0;
  double energy = 0.0;
  /// ln(rho), the entropy term inside the free energy.
  double entropy = 0.0;
  double free_energy = 0.0;
  double shannon = 0.0;
  double renyi = 0.0;
  double tsallis = 0.0;
  double q = 0.0;
};

/// Probability vector; entries >= 0 summing to 1 within 1e-12.
class DiscreteDistribution {
 public:
  /// Throws InvalidArgument if the invariant fails.
  explicit DiscreteDistribution(std::vector<double> p);
  std::span<const double> p() const { return p_; }

 private:
  std::vector<double> p_;
};

struct FreeEnergy {
  double energy;
  double entropy;
  double free_energy;
};

/// Counts entries strictly above 1/N and sums them.
HighProbStats count_high_prob(const PhiMatrix& phi);

double density_of_states(double n_high, std::size_t vocab_size, std::size_t topics);

/// E = -ln(mass / T), S = ln(n_high / (N T)), F = E - T S.
/// Throws DegenerateModelError when n_high or prob_mass is not positive.
FreeEnergy free_energy(double prob_mass, double n_high, std::size_t vocab_size, std::size_t topics);

/// ln(rho). Throws DegenerateModelError for rho <= 0.
double shannon_from_density(double rho);

/// F / (T - 1), the Renyi entropy at q = 1/T. Throws DivergenceError for T < 2.
double renyi_from_free_energy(double free_energy, std::size_t topics);

/// (exp((q - 1) R) - 1) / (q - 1). Throws DivergenceError for q = 1.
double tsallis_from_renyi(double renyi, double q);

/// ln(sum p^q) / (1 - q). Throws DivergenceError for q = 1.
double renyi_direct(const DiscreteDistribution& p, double q);
/// (1 - sum p^q) / (q - 1). Throws DivergenceError for q = 1.
double tsallis_direct(const DiscreteDistribution& p, double q);
/// -sum p ln p.
double shannon_direct(const DiscreteDistribution& p);

/// Full diagnostic chain from high-probability statistics. Throws
/// DegenerateModelError or DivergenceError.
EntropyPoint evaluate_statistics(const HighProbStats& stats, std::size_t vocab_size, std::size_t topics);
EntropyPoint evaluate_statistics(double n_high, double prob_mass, std::size_t vocab_size, std::size_t topics);

/// evaluate_statistics(count_high_prob(phi), N, T).
EntropyPoint evaluate_solution(const PhiMatrix& phi);

/// Mean over topics of the Shannon entropy -sum_w phi_wt ln phi_wt.
double mean_topic_shannon(const PhiMatrix& phi);

}  // namespace topicent
