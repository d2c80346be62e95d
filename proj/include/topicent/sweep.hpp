#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topicent/corpus.hpp"
#include "topicent/entropy.hpp"
#include "topicent/invariance.hpp"
#include "topicent/model.hpp"

namespace topicent {

struct SweepConfig {
  ModelKind model = ModelKind::LdaGibbs;
  std::size_t t_min = 2;
  std::size_t t_max = 120;
  std::size_t t_step = 2;
  std::size_t runs = 3;
  std::uint64_t base_seed = 0;
  /// Unset means 50/T at each T.
  std::optional<double> alpha;
  double beta = 0.01;
  std::size_t iterations = 100;
  std::size_t glda_region = 1;
  bool argmax_assignment = false;

  void validate() const;
  std::vector<std::size_t> t_values() const;
  /// The per-fit config used at (T, run).
  ModelConfig model_config(std::size_t topics, std::size_t run) const;
};

/// Seed of cell (T, run):
///   splitmix64(splitmix64(splitmix64(base) ^ T) ^ run)
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t topics, std::size_t run);

/// One (T, run) fit.
struct SweepCell {
  std::size_t topics = 0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  HighProbStats stats;
  double shannon_classical = 0.0;
  /// Absent when the solution is degenerate; `error` then says why.
  std::optional<EntropyPoint> point;
  std::string error;
  TopWordSet top_words;
  /// Top-word ids ranked by max-topic probability.
  std::vector<WordId> ranked_words;
};

/// Diagnostics of one T computed from run-averaged statistics.
struct AveragedPoint {
  std::size_t topics = 0;
  std::size_t used_runs = 0;
  double n_high = 0.0;
  double prob_mass = 0.0;
  double shannon_classical = 0.0;
  std::optional<EntropyPoint> point;
};

struct SweepReport {
  SweepConfig config;
  std::size_t num_documents = 0;
  std::size_t vocab_size = 0;
  std::size_t total_tokens = 0;
  std::vector<std::string> vocabulary;
  /// Ordered by T, then run.
  std::vector<SweepCell> cells;
  std::vector<AveragedPoint> averaged;
  /// One matrix per run over that run's solutions; [0] is the primary one.
  std::vector<JaccardMatrix> jaccard;
  std::optional<std::size_t> argmin_renyi;

  const SweepCell& cell(std::size_t t_index, std::size_t run) const {
    return cells[t_index * config.runs + run];
  }
};

/// Averages n_high and prob_mass over the non-degenerate runs of one T and
/// recomputes every diagnostic from those means.
AveragedPoint average_cells(std::span<const SweepCell> runs_of_one_t, std::size_t vocab_size);

/// Fits every (T, run), evaluates it, and aggregates. Cells run in parallel;
/// the report does not depend on the thread count. Degenerate solutions are
/// recorded, never fatal.
SweepReport run_sweep(const Corpus& corpus, const SweepConfig& config);

/// Fits and evaluates a single cell exactly as run_sweep does.
SweepCell run_cell(const Corpus& corpus, const SweepConfig& config, std::size_t topics, std::size_t run);

/// Writes entropy_curve.csv, jaccard_diagonal.csv, jaccard_matrix.csv
/// (plus jaccard_matrix_run{r}.csv for r >= 1), top_words_T{T}.txt and
/// manifest.json into `dir`, creating it if needed. Throws IoError.
void emit_report(const SweepReport& report, const std::filesystem::path& dir);

/// Reads every top_words_T{T}.txt in `dir`, ordered by T. Word strings get
/// ids in first-seen order.
std::vector<TopWordSet> read_top_word_files(const std::filesystem::path& dir);

/// Writes jaccard_matrix.csv and jaccard_diagonal.csv for `sets` into `dir`.
void write_invariance(std::span<const TopWordSet> sets, const std::filesystem::path& dir);

}  // namespace topicent
