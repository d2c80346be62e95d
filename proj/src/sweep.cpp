#include "topicent/sweep.hpp"

#include <cstdint>
#include <exception>

#include <fmt/format.h>

#include "topicent/error.hpp"
#include "topicent/rng.hpp"

namespace topicent {

void SweepConfig::validate() const {
  if (t_min < 2) throw InvalidArgument("t_min must be at least 2");
  if (t_max < t_min) throw InvalidArgument("t_max must be >= t_min");
  if (t_step < 1) throw InvalidArgument("t_step must be >= 1");
  if (runs < 1) throw InvalidArgument("runs must be >= 1");
  model_config(t_min, 0).validate();
}

std::vector<std::size_t> SweepConfig::t_values() const {
  std::vector<std::size_t> ts;
  for (std::size_t t = t_min; t <= t_max; t += t_step) ts.push_back(t);
  return ts;
}

ModelConfig SweepConfig::model_config(std::size_t topics, std::size_t run) const {
  auto c = ModelConfig::with_defaults(model, topics, derive_seed(base_seed, topics, run));
  if (alpha) c.alpha = *alpha;
  c.beta = beta;
  c.iterations = iterations;
  c.glda_region = glda_region;
  c.argmax_assignment = argmax_assignment;
  return c;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t topics, std::size_t run) {
  return splitmix64(splitmix64(splitmix64(base_seed) ^ topics) ^ run);
}

SweepCell run_cell(const Corpus& corpus, const SweepConfig& config, std::size_t topics, std::size_t run) {
  const auto mc = config.model_config(topics, run);
  const auto result = fit(corpus, mc);

  SweepCell cell;
  cell.topics = topics;
  cell.run = run;
  cell.seed = mc.seed;
  cell.alpha = mc.alpha;
  cell.stats = count_high_prob(result.phi);
  cell.shannon_classical = mean_topic_shannon(result.phi);
  try {
    cell.point = evaluate_statistics(cell.stats, corpus.vocab_size(), topics);
  } catch (const DegenerateModelError& e) {
    cell.error = e.what();
  } catch (const DivergenceError& e) {
    cell.error = e.what();
  }
  cell.top_words = top_words(result.phi);
  cell.ranked_words = ranked_top_words(result.phi);
  return cell;
}

AveragedPoint average_cells(std::span<const SweepCell> runs_of_one_t, std::size_t vocab_size) {
  AveragedPoint avg;
  if (runs_of_one_t.empty()) return avg;
  avg.topics = runs_of_one_t.front().topics;
  double n_high = 0.0, mass = 0.0, shannon = 0.0;
  for (const auto& c : runs_of_one_t) {
    if (!c.point) continue;
    ++avg.used_runs;
    n_high += static_cast<double>(c.stats.n_high);
    mass += c.stats.prob_mass;
    shannon += c.shannon_classical;
  }
  if (avg.used_runs == 0) return avg;
  const auto used = static_cast<double>(avg.used_runs);
  avg.n_high = n_high / used;
  avg.prob_mass = mass / used;
  avg.shannon_classical = shannon / used;
  avg.point = evaluate_statistics(avg.n_high, avg.prob_mass, vocab_size, avg.topics);
  return avg;
}

SweepReport run_sweep(const Corpus& corpus, const SweepConfig& config) {
  config.validate();
  if (config.t_max > corpus.vocab_size())
    throw InvalidArgument(fmt::format("t_max = {} exceeds vocabulary size {}", config.t_max, corpus.vocab_size()));

  SweepReport report;
  report.config = config;
  report.num_documents = corpus.num_documents();
  report.vocab_size = corpus.vocab_size();
  report.total_tokens = corpus.total_tokens();
  report.vocabulary = corpus.vocabulary().words();

  const auto ts = config.t_values();
  const std::size_t runs = config.runs;
  report.cells.resize(ts.size() * runs);
  std::vector<std::exception_ptr> failures(report.cells.size());

  const auto num_cells = static_cast<std::int64_t>(report.cells.size());
  // Largest T first: those fits dominate the runtime.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < num_cells; ++k) {
    const auto idx = static_cast<std::size_t>(num_cells - 1 - k);
    try {
      report.cells[idx] = run_cell(corpus, config, ts[idx / runs], idx % runs);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    report.averaged.push_back(
        average_cells(std::span<const SweepCell>(report.cells).subspan(i * runs, runs), corpus.vocab_size()));
    const auto& p = report.averaged.back().point;
    if (p && (!best || p->renyi < report.averaged[*best].point->renyi)) best = i;
  }
  if (best) report.argmin_renyi = ts[*best];

  for (std::size_t r = 0; r < runs; ++r) {
    std::vector<TopWordSet> sets;
    for (std::size_t i = 0; i < ts.size(); ++i) sets.push_back(report.cell(i, r).top_words);
    report.jaccard.push_back(jaccard_matrix_any(sets));
  }
  return report;
}

}  // namespace topicent
