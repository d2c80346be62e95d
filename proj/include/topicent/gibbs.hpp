#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "topicent/corpus.hpp"
#include "topicent/model.hpp"

namespace topicent {

using TopicId = std::uint32_t;

/// Sufficient statistics of the collapsed Gibbs sampler.
struct CountTables {
  std::size_t topics = 0;
  std::size_t vocab_size = 0;
  std::vector<std::int32_t> word_topic;    // N x T, row-major
  std::vector<std::int32_t> doc_topic;     // D x T, row-major
  std::vector<std::int32_t> topic_totals;  // T
  std::vector<std::int32_t> doc_lengths;   // D
  /// Topic of every token, documents concatenated in order.
  std::vector<TopicId> assignments;
  /// assignments[doc_offsets[d] + i] is token i of document d.
  std::vector<std::size_t> doc_offsets;

  std::int32_t& wt(std::size_t w, std::size_t t) { return word_topic[w * topics + t]; }
  std::int32_t wt(std::size_t w, std::size_t t) const { return word_topic[w * topics + t]; }
  std::int32_t& dt(std::size_t d, std::size_t t) { return doc_topic[d * topics + t]; }
  std::int32_t dt(std::size_t d, std::size_t t) const { return doc_topic[d * topics + t]; }

  /// Zeroed tables shaped for `corpus`; assignments are all topic 0 and not
  /// yet counted.
  static CountTables empty(const Corpus& corpus, std::size_t topics);

  void add(std::size_t w, std::size_t d, TopicId t);
  void remove(std::size_t w, std::size_t d, TopicId t);

  /// Recounts from `assignments` and compares with the stored counters.
  bool consistent_with(const Corpus& corpus) const;

  bool operator==(const CountTables&) const = default;
};

/// Unnormalized full conditional of every topic for token (word, doc):
///   ((c_wt + beta) / (n_t + N beta)) * ((c_dt + alpha) / (n_d + T alpha))
/// The token being resampled must already be removed from the counts.
void conditional_weights(const CountTables& tables, std::size_t word, std::size_t doc,
                         const ModelConfig& config, std::span<double> out);

/// Phi and theta from counts (posterior means).
PhiMatrix phi_from_counts(const CountTables& tables, double beta);
ThetaMatrix theta_from_counts(const CountTables& tables, double alpha);

/// Runs the sampler and returns the final counts. Token topics are
/// initialized uniformly from stream 0 of the seed; sweeps draw from stream 1.
CountTables sample_lda_gs(const Corpus& corpus, const ModelConfig& config);
/// GLDA sweep: documents are tiled into granules of 2r+1 consecutive tokens;
/// each granule is removed from the counts, one topic is drawn from the
/// conditional of its anchor (centre) token, and the whole granule takes it.
CountTables sample_glda(const Corpus& corpus, const ModelConfig& config);

FitResult fit_lda_gs(const Corpus& corpus, const ModelConfig& config);
FitResult fit_glda(const Corpus& corpus, const ModelConfig& config);

}  // namespace topicent
