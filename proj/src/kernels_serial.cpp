#include <algorithm>

#include "kernel_detail.hpp"
#include "topicent/kernels.hpp"

namespace topicent::kernels {

std::optional<double> jaccard_sorted(std::span<const WordId> a, std::span<const WordId> b) {
  if (a.empty() && b.empty()) return std::nullopt;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

namespace serial {

void expectation(const EmWorkspace& ws, const PhiMatrix& phi, const ThetaMatrix& theta, ExpectedCounts& out) {
  const std::size_t topics = phi.topics();
  out.word_topic.assign(ws.vocab_size() * topics, 0.0);
  out.doc_topic.assign(ws.num_documents() * topics, 0.0);
  out.loglik = 0.0;
  out.zero_mixture = false;

  std::vector<double> post(topics);
  for (std::size_t d = 0; d < ws.num_documents(); ++d) {
    std::span<double> doc_row(out.doc_topic.data() + d * topics, topics);
    double doc_ll = 0.0;
    for (const auto& [w, count] : ws.doc_postings(d)) {
      const auto mix = detail::posterior(phi.row(w), theta.document(d), post);
      out.zero_mixture = out.zero_mixture || mix.zero;
      detail::accumulate(doc_row, post, count);
      detail::accumulate({out.word_topic.data() + std::size_t{w} * topics, topics}, post, count);
      doc_ll += count * std::log(mix.value);
    }
    out.loglik += doc_ll;
  }
}

HighProbStats scan_high_prob(const PhiMatrix& phi) {
  const double threshold = detail::high_threshold(phi);
  HighProbStats stats;
  for (std::size_t t = 0; t < phi.topics(); ++t) {
    std::size_t count;
    double mass;
    detail::scan_topic(phi, t, threshold, count, mass);
    stats.n_high += count;
    stats.prob_mass += mass;
  }
  return stats;
}

std::vector<std::optional<double>> jaccard_cells(std::span<const std::vector<WordId>> sets) {
  const std::size_t n = sets.size();
  std::vector<std::optional<double>> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      cells[i * n + j] = jaccard_sorted(sets[i], sets[j]);
      cells[j * n + i] = cells[i * n + j];
    }
  return cells;
}

}  // namespace serial
}  // namespace topicent::kernels
