#include "topicent/synthetic.hpp"

#include <algorithm>

#include "topicent/error.hpp"
#include "topicent/rng.hpp"

namespace topicent {

namespace {

/// Inverse-CDF draw from a discrete distribution given as a prefix-sum table.
std::size_t draw_cumulative(const std::vector<double>& cumulative, Rng& rng) {
  const double u = rng.uniform() * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<std::size_t>(it - cumulative.begin());
}

}  // namespace

SyntheticCorpus generate_synthetic(std::size_t topics, std::size_t vocab_size, std::size_t documents,
                                   std::size_t doc_len, double alpha, double beta, std::uint64_t seed) {
  if (topics < 1 || vocab_size < 1 || documents < 1 || doc_len < 1)
    throw InvalidArgument("synthetic corpus dimensions must be >= 1");
  if (topics > vocab_size) throw InvalidArgument("more planted topics than words");
  if (!(alpha > 0.0) || !(beta > 0.0)) throw InvalidArgument("alpha and beta must be positive");

  PhiMatrix phi(vocab_size, topics);
  std::vector<std::vector<double>> word_cdf(topics, std::vector<double>(vocab_size));
  Rng topic_rng(seed, 0);
  std::vector<double> column(vocab_size);
  for (std::size_t t = 0; t < topics; ++t) {
    topic_rng.dirichlet(beta, column);
    double acc = 0.0;
    for (std::size_t w = 0; w < vocab_size; ++w) {
      phi(w, t) = column[w];
      acc += column[w];
      word_cdf[t][w] = acc;
    }
  }

  Vocabulary vocab;
  for (std::size_t w = 0; w < vocab_size; ++w) vocab.intern("w" + std::to_string(w));

  Rng doc_rng(seed, 1);
  std::vector<double> mixture(topics);
  std::vector<double> topic_cdf(topics);
  std::vector<Document> docs(documents);
  for (auto& doc : docs) {
    doc_rng.dirichlet(alpha, mixture);
    double acc = 0.0;
    for (std::size_t t = 0; t < topics; ++t) topic_cdf[t] = acc += mixture[t];
    doc.tokens.resize(doc_len);
    for (auto& tok : doc.tokens) {
      const auto t = draw_cumulative(topic_cdf, doc_rng);
      tok = static_cast<WordId>(draw_cumulative(word_cdf[t], doc_rng));
    }
  }
  return SyntheticCorpus{Corpus(std::move(vocab), std::move(docs)), std::move(phi)};
}

}  // namespace topicent
