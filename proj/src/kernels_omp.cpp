#include <cstdint>

#include "kernel_detail.hpp"
#include "topicent/kernels.hpp"

namespace topicent::kernels::omp {

// Two passes instead of one: documents in parallel fill doc_topic and the
// per-document log-likelihood, words in parallel fill word_topic. Each
// accumulator sees the same additions in the same order as the serial
// kernel (words ascending within a document, documents ascending within a
// word), so results match it bit for bit.
void expectation(const EmWorkspace& ws, const PhiMatrix& phi, const ThetaMatrix& theta, ExpectedCounts& out) {
  const std::size_t topics = phi.topics();
  const auto num_docs = static_cast<std::int64_t>(ws.num_documents());
  const auto num_words = static_cast<std::int64_t>(ws.vocab_size());
  out.word_topic.assign(ws.vocab_size() * topics, 0.0);
  out.doc_topic.assign(ws.num_documents() * topics, 0.0);
  std::vector<double> doc_ll(ws.num_documents(), 0.0);
  bool zero = false;

#pragma omp parallel
  {
    std::vector<double> post(topics);
#pragma omp for schedule(static) reduction(|| : zero)
    for (std::int64_t d = 0; d < num_docs; ++d) {
      std::span<double> doc_row(out.doc_topic.data() + d * topics, topics);
      double ll = 0.0;
      for (const auto& [w, count] : ws.doc_postings(d)) {
        const auto mix = detail::posterior(phi.row(w), theta.document(d), post);
        zero = zero || mix.zero;
        detail::accumulate(doc_row, post, count);
        ll += count * std::log(mix.value);
      }
      doc_ll[d] = ll;
    }

#pragma omp for schedule(dynamic, 64)
    for (std::int64_t w = 0; w < num_words; ++w) {
      std::span<double> word_row(out.word_topic.data() + w * topics, topics);
      for (const auto& [d, count] : ws.word_postings(w)) {
        detail::posterior(phi.row(w), theta.document(d), post);
        detail::accumulate(word_row, post, count);
      }
    }
  }

  out.loglik = 0.0;
  for (double ll : doc_ll) out.loglik += ll;
  out.zero_mixture = zero;
}

HighProbStats scan_high_prob(const PhiMatrix& phi) {
  const double threshold = detail::high_threshold(phi);
  const auto topics = static_cast<std::int64_t>(phi.topics());
  std::vector<std::size_t> counts(phi.topics());
  std::vector<double> masses(phi.topics());
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < topics; ++t) detail::scan_topic(phi, t, threshold, counts[t], masses[t]);

  HighProbStats stats;
  for (std::size_t t = 0; t < phi.topics(); ++t) {
    stats.n_high += counts[t];
    stats.prob_mass += masses[t];
  }
  return stats;
}

std::vector<std::optional<double>> jaccard_cells(std::span<const std::vector<WordId>> sets) {
  const std::size_t n = sets.size();
  std::vector<std::optional<double>> cells(n * n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::size_t j = i; j < n; ++j) {
      cells[i * n + j] = jaccard_sorted(sets[i], sets[j]);
      cells[j * n + i] = cells[i * n + j];
    }
  return cells;
}

}  // namespace topicent::kernels::omp
