#include "topicent/gibbs.hpp"

#include <algorithm>

#include "topicent/error.hpp"
#include "topicent/rng.hpp"

namespace topicent {

CountTables CountTables::empty(const Corpus& corpus, std::size_t topics) {
  CountTables tables;
  tables.topics = topics;
  tables.vocab_size = corpus.vocab_size();
  tables.word_topic.assign(corpus.vocab_size() * topics, 0);
  tables.doc_topic.assign(corpus.num_documents() * topics, 0);
  tables.topic_totals.assign(topics, 0);
  tables.doc_lengths.resize(corpus.num_documents());
  tables.doc_offsets.resize(corpus.num_documents() + 1);
  std::size_t offset = 0;
  for (const auto& doc : corpus.documents()) {
    tables.doc_offsets[doc.id] = offset;
    tables.doc_lengths[doc.id] = static_cast<std::int32_t>(doc.length());
    offset += doc.length();
  }
  tables.doc_offsets.back() = offset;
  tables.assignments.assign(offset, 0);
  return tables;
}

void CountTables::add(std::size_t w, std::size_t d, TopicId t) {
  ++wt(w, t);
  ++dt(d, t);
  ++topic_totals[t];
}

void CountTables::remove(std::size_t w, std::size_t d, TopicId t) {
  --wt(w, t);
  --dt(d, t);
  --topic_totals[t];
}

bool CountTables::consistent_with(const Corpus& corpus) const {
  auto fresh = empty(corpus, topics);
  fresh.assignments = assignments;
  for (const auto& doc : corpus.documents())
    for (std::size_t i = 0; i < doc.length(); ++i) {
      const auto t = assignments[doc_offsets[doc.id] + i];
      if (t >= topics) return false;
      fresh.add(doc.tokens[i], doc.id, t);
    }
  return fresh == *this;
}

void conditional_weights(const CountTables& tables, std::size_t word, std::size_t doc, const ModelConfig& config,
                         std::span<double> out) {
  const double beta = config.beta;
  const double alpha = config.alpha;
  const double vocab_beta = static_cast<double>(tables.vocab_size) * beta;
  const double doc_denom = tables.doc_lengths[doc] + static_cast<double>(tables.topics) * alpha;
  for (std::size_t t = 0; t < tables.topics; ++t) {
    const double word_factor = (tables.wt(word, t) + beta) / (tables.topic_totals[t] + vocab_beta);
    const double doc_factor = (tables.dt(doc, t) + alpha) / doc_denom;
    out[t] = word_factor * doc_factor;
  }
}

PhiMatrix phi_from_counts(const CountTables& tables, double beta) {
  PhiMatrix phi(tables.vocab_size, tables.topics);
  const double vocab_beta = static_cast<double>(tables.vocab_size) * beta;
  for (std::size_t w = 0; w < tables.vocab_size; ++w)
    for (std::size_t t = 0; t < tables.topics; ++t)
      phi(w, t) = (tables.wt(w, t) + beta) / (tables.topic_totals[t] + vocab_beta);
  return phi;
}

ThetaMatrix theta_from_counts(const CountTables& tables, double alpha) {
  const std::size_t docs = tables.doc_lengths.size();
  ThetaMatrix theta(tables.topics, docs);
  const double topic_alpha = static_cast<double>(tables.topics) * alpha;
  for (std::size_t d = 0; d < docs; ++d)
    for (std::size_t t = 0; t < tables.topics; ++t)
      theta(t, d) = (tables.dt(d, t) + alpha) / (tables.doc_lengths[d] + topic_alpha);
  return theta;
}

namespace {

/// Sampling draws proportionally; argmax mode breaks ties toward the lowest index.
TopicId draw_topic(std::span<const double> weights, Rng& rng, bool argmax) {
  if (argmax) return static_cast<TopicId>(std::max_element(weights.begin(), weights.end()) - weights.begin());
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  for (std::size_t t = 0; t + 1 < weights.size(); ++t) {
    cumulative += weights[t];
    if (u < cumulative) return static_cast<TopicId>(t);
  }
  return static_cast<TopicId>(weights.size() - 1);
}

CountTables initialize(const Corpus& corpus, const ModelConfig& config) {
  config.validate();
  auto tables = CountTables::empty(corpus, config.topics);
  Rng rng(config.seed, 0);
  for (const auto& doc : corpus.documents()) {
    auto* z = tables.assignments.data() + tables.doc_offsets[doc.id];
    for (std::size_t i = 0; i < doc.length(); ++i) {
      z[i] = static_cast<TopicId>(rng.uniform_index(config.topics));
      tables.add(doc.tokens[i], doc.id, z[i]);
    }
  }
  return tables;
}

FitResult to_result(const CountTables& tables, const ModelConfig& config) {
  return FitResult{phi_from_counts(tables, config.beta), theta_from_counts(tables, config.alpha), {}, config};
}

}  // namespace

CountTables sample_lda_gs(const Corpus& corpus, const ModelConfig& config) {
  auto tables = initialize(corpus, config);
  Rng rng(config.seed, 1);
  std::vector<double> weights(config.topics);
  for (std::size_t sweep = 0; sweep < config.iterations; ++sweep) {
    for (const auto& doc : corpus.documents()) {
      auto* z = tables.assignments.data() + tables.doc_offsets[doc.id];
      for (std::size_t i = 0; i < doc.length(); ++i) {
        const auto w = doc.tokens[i];
        tables.remove(w, doc.id, z[i]);
        conditional_weights(tables, w, doc.id, config, weights);
        z[i] = draw_topic(weights, rng, config.argmax_assignment);
        tables.add(w, doc.id, z[i]);
      }
    }
  }
  return tables;
}

CountTables sample_glda(const Corpus& corpus, const ModelConfig& config) {
  auto tables = initialize(corpus, config);
  Rng rng(config.seed, 1);
  std::vector<double> weights(config.topics);
  const std::size_t radius = config.glda_region;
  const std::size_t span = 2 * radius + 1;
  for (std::size_t sweep = 0; sweep < config.iterations; ++sweep) {
    for (const auto& doc : corpus.documents()) {
      auto* z = tables.assignments.data() + tables.doc_offsets[doc.id];
      const std::size_t len = doc.length();
      for (std::size_t start = 0; start < len; start += span) {
        const std::size_t end = std::min(start + span, len);
        const std::size_t anchor = std::min(start + radius, end - 1);
        for (std::size_t i = start; i < end; ++i) tables.remove(doc.tokens[i], doc.id, z[i]);
        conditional_weights(tables, doc.tokens[anchor], doc.id, config, weights);
        const TopicId topic = draw_topic(weights, rng, config.argmax_assignment);
        for (std::size_t i = start; i < end; ++i) {
          z[i] = topic;
          tables.add(doc.tokens[i], doc.id, topic);
        }
      }
    }
  }
  return tables;
}

FitResult fit_lda_gs(const Corpus& corpus, const ModelConfig& config) {
  return to_result(sample_lda_gs(corpus, config), config);
}

FitResult fit_glda(const Corpus& corpus, const ModelConfig& config) {
  return to_result(sample_glda(corpus, config), config);
}

}  // namespace topicent
