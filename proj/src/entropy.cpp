#include "topicent/entropy.hpp"

#include <cmath>

#include <fmt/format.h>

#include "topicent/error.hpp"

namespace topicent {

DiscreteDistribution::DiscreteDistribution(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw InvalidArgument("distribution has no states");
  double total = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("distribution entries must be finite and >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument(fmt::format("distribution sums to {:.17g}", total));
}

HighProbStats count_high_prob(const PhiMatrix& phi) { return kernels::omp::scan_high_prob(phi); }

double density_of_states(double n_high, std::size_t vocab_size, std::size_t topics) {
  if (vocab_size < 1 || topics < 1) throw InvalidArgument("density_of_states: N and T must be >= 1");
  return n_high / (static_cast<double>(vocab_size) * static_cast<double>(topics));
}

namespace {

void require_deformed(std::size_t topics) {
  if (topics < 2) throw DivergenceError("q-deformed entropy diverges at T = 1 (q = 1)");
}

void require_q(double q) {
  if (q == 1.0) throw DivergenceError("q-deformed entropy diverges at q = 1");
}

/// sum_k p_k^q - 1, written as sum_k p_k (p_k^(q-1) - 1) to keep precision near q = 1.
double power_sum_minus_one(const DiscreteDistribution& dist, double q) {
  double acc = 0.0;
  for (double p : dist.p()) {
    if (p > 0.0) acc += p * std::expm1((q - 1.0) * std::log(p));
  }
  return acc;
}

}  // namespace

FreeEnergy free_energy(double prob_mass, double n_high, std::size_t vocab_size, std::size_t topics) {
  require_deformed(topics);
  if (!(n_high > 0.0)) throw DegenerateModelError("no probabilities above 1/N");
  if (!(prob_mass > 0.0)) throw DegenerateModelError("zero probability mass above 1/N");
  const double t = static_cast<double>(topics);
  FreeEnergy f{};
  f.energy = -std::log(prob_mass / t);
  f.entropy = std::log(density_of_states(n_high, vocab_size, topics));
  f.free_energy = f.energy - t * f.entropy;
  return f;
}

double shannon_from_density(double rho) {
  if (!(rho > 0.0)) throw DegenerateModelError("density of states is zero");
  return std::log(rho);
}

double renyi_from_free_energy(double free_energy, std::size_t topics) {
  require_deformed(topics);
  return free_energy / static_cast<double>(topics - 1);
}

double tsallis_from_renyi(double renyi, double q) {
  require_q(q);
  return std::expm1((q - 1.0) * renyi) / (q - 1.0);
}

double renyi_direct(const DiscreteDistribution& p, double q) {
  require_q(q);
  return std::log1p(power_sum_minus_one(p, q)) / (1.0 - q);
}

double tsallis_direct(const DiscreteDistribution& p, double q) {
  require_q(q);
  return -power_sum_minus_one(p, q) / (q - 1.0);
}

double shannon_direct(const DiscreteDistribution& p) {
  double h = 0.0;
  for (double v : p.p())
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

EntropyPoint evaluate_statistics(double n_high, double prob_mass, std::size_t vocab_size, std::size_t topics) {
  require_deformed(topics);
  EntropyPoint pt;
  pt.topics = topics;
  pt.vocab_size = vocab_size;
  pt.n_high = n_high;
  pt.prob_mass = prob_mass;
  pt.q = 1.0 / static_cast<double>(topics);
  pt.rho = density_of_states(n_high, vocab_size, topics);
  const auto f = free_energy(prob_mass, n_high, vocab_size, topics);
  pt.energy = f.energy;
  pt.entropy = f.entropy;
  pt.free_energy = f.free_energy;
  pt.shannon = shannon_from_density(pt.rho);
  pt.renyi = renyi_from_free_energy(f.free_energy, topics);
  pt.tsallis = tsallis_from_renyi(pt.renyi, pt.q);
  return pt;
}

EntropyPoint evaluate_statistics(const HighProbStats& stats, std::size_t vocab_size, std::size_t topics) {
  return evaluate_statistics(static_cast<double>(stats.n_high), stats.prob_mass, vocab_size, topics);
}

EntropyPoint evaluate_solution(const PhiMatrix& phi) {
  return evaluate_statistics(count_high_prob(phi), phi.words(), phi.topics());
}

double mean_topic_shannon(const PhiMatrix& phi) {
  if (phi.topics() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t t = 0; t < phi.topics(); ++t) {
    double h = 0.0;
    for (std::size_t w = 0; w < phi.words(); ++w) {
      const double v = phi(w, t);
      if (v > 0.0) h -= v * std::log(v);
    }
    total += h;
  }
  return total / static_cast<double>(phi.topics());
}

}  // namespace topicent
