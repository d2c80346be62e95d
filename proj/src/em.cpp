#include "topicent/em.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <fmt/format.h>

#include "topicent/error.hpp"
#include "topicent/kernels.hpp"
#include "topicent/rng.hpp"

namespace topicent {

EmWorkspace::EmWorkspace(const Corpus& corpus)
    : doc_postings_(corpus.num_documents()),
      word_postings_(corpus.vocab_size()),
      doc_lengths_(corpus.num_documents(), 0.0) {
  std::vector<std::uint32_t> counts(corpus.vocab_size(), 0);
  std::vector<WordId> touched;
  for (const auto& doc : corpus.documents()) {
    touched.clear();
    for (auto w : doc.tokens) {
      if (counts[w]++ == 0) touched.push_back(w);
    }
    std::sort(touched.begin(), touched.end());
    auto& row = doc_postings_[doc.id];
    row.reserve(touched.size());
    for (auto w : touched) {
      const double c = counts[w];
      row.push_back({w, c});
      word_postings_[w].push_back({static_cast<std::uint32_t>(doc.id), c});
      counts[w] = 0;
    }
    doc_lengths_[doc.id] = static_cast<double>(doc.tokens.size());
    total_tokens_ += doc_lengths_[doc.id];
  }
}

std::pair<PhiMatrix, ThetaMatrix> random_initialization(const Corpus& corpus, const ModelConfig& config) {
  const std::size_t topics = config.topics;
  const std::size_t words = corpus.vocab_size();
  PhiMatrix phi(words, topics);
  ThetaMatrix theta(topics, corpus.num_documents());

  Rng phi_rng(config.seed, 0);
  std::vector<double> column(words);
  for (std::size_t t = 0; t < topics; ++t) {
    phi_rng.dirichlet(1.0, column);
    for (std::size_t w = 0; w < words; ++w) phi(w, t) = column[w];
  }
  Rng theta_rng(config.seed, 1);
  for (std::size_t d = 0; d < corpus.num_documents(); ++d) theta_rng.dirichlet(1.0, theta.document(d));
  return {std::move(phi), std::move(theta)};
}

namespace {

struct Smoothing {
  double word = 0.0;  // added to every n_wt
  double doc = 0.0;   // added to every n_td
};

void m_step(const kernels::ExpectedCounts& ec, Smoothing s, PhiMatrix& phi, ThetaMatrix& theta) {
  const std::size_t topics = phi.topics();
  const std::size_t words = phi.words();
  std::vector<double> topic_totals(topics, 0.0);
  for (std::size_t w = 0; w < words; ++w)
    for (std::size_t t = 0; t < topics; ++t) topic_totals[t] += ec.word_topic[w * topics + t];

  std::vector<double> denom(topics);
  std::vector<bool> empty(topics);
  for (std::size_t t = 0; t < topics; ++t) {
    denom[t] = topic_totals[t] + static_cast<double>(words) * s.word;
    empty[t] = !(denom[t] > 0.0);
  }
  const double uniform_word = 1.0 / static_cast<double>(words);

  const auto num_words = static_cast<std::int64_t>(words);
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < num_words; ++w) {
    for (std::size_t t = 0; t < topics; ++t)
      phi(w, t) = empty[t] ? uniform_word : (ec.word_topic[w * topics + t] + s.word) / denom[t];
  }

  const auto num_docs = static_cast<std::int64_t>(theta.documents());
  const double uniform_topic = 1.0 / static_cast<double>(topics);
#pragma omp parallel for schedule(static)
  for (std::int64_t d = 0; d < num_docs; ++d) {
    const double* row = ec.doc_topic.data() + d * topics;
    double length = 0.0;
    for (std::size_t t = 0; t < topics; ++t) length += row[t];
    const double doc_denom = length + static_cast<double>(topics) * s.doc;
    auto out = theta.document(d);
    for (std::size_t t = 0; t < topics; ++t) out[t] = doc_denom > 0.0 ? (row[t] + s.doc) / doc_denom : uniform_topic;
  }
}

double log_prior(const PhiMatrix& phi, const ThetaMatrix& theta, Smoothing s) {
  double total = 0.0;
  if (s.word > 0.0) {
    double acc = 0.0;
    for (double v : phi.values()) acc += std::log(v);
    total += s.word * acc;
  }
  if (s.doc > 0.0) {
    double acc = 0.0;
    for (double v : theta.values()) acc += std::log(v);
    total += s.doc * acc;
  }
  return total;
}

void check_shapes(const Corpus& corpus, const ModelConfig& config, const PhiMatrix& phi, const ThetaMatrix& theta) {
  if (phi.words() != corpus.vocab_size() || phi.topics() != config.topics || theta.topics() != config.topics ||
      theta.documents() != corpus.num_documents())
    throw InvalidArgument("initial matrices do not match corpus and topic count");
}

FitResult run_em(const Corpus& corpus, const ModelConfig& config, PhiMatrix phi, ThetaMatrix theta, Smoothing s) {
  config.validate();
  check_shapes(corpus, config, phi, theta);
  const EmWorkspace ws(corpus);
  kernels::ExpectedCounts ec;

  std::vector<double> trace;
  trace.reserve(config.iterations);
  auto record = [&](double objective) {
    if (!trace.empty()) {
      const double prev = trace.back();
      const double slack = 1e-8 * std::max(1.0, std::abs(prev));
      if (objective < prev - slack)
        throw InternalError(fmt::format("EM objective decreased at iteration {}: {:.17g} -> {:.17g}", trace.size(),
                                        prev, objective));
    }
    trace.push_back(objective);
  };

  for (std::size_t it = 0; it < config.iterations; ++it) {
    kernels::omp::expectation(ws, phi, theta, ec);
    if (it > 0) record(ec.loglik + log_prior(phi, theta, s));
    m_step(ec, s, phi, theta);
  }
  kernels::omp::expectation(ws, phi, theta, ec);
  record(ec.loglik + log_prior(phi, theta, s));

  return FitResult{std::move(phi), std::move(theta), std::move(trace), config};
}

}  // namespace

FitResult fit_plsa_from(const Corpus& corpus, const ModelConfig& config, PhiMatrix phi, ThetaMatrix theta) {
  return run_em(corpus, config, std::move(phi), std::move(theta), Smoothing{});
}

FitResult fit_vlda_from(const Corpus& corpus, const ModelConfig& config, PhiMatrix phi, ThetaMatrix theta) {
  return run_em(corpus, config, std::move(phi), std::move(theta), Smoothing{config.beta, config.alpha});
}

FitResult fit_plsa(const Corpus& corpus, const ModelConfig& config) {
  config.validate();
  auto [phi, theta] = random_initialization(corpus, config);
  return fit_plsa_from(corpus, config, std::move(phi), std::move(theta));
}

FitResult fit_vlda(const Corpus& corpus, const ModelConfig& config) {
  config.validate();
  auto [phi, theta] = random_initialization(corpus, config);
  return fit_vlda_from(corpus, config, std::move(phi), std::move(theta));
}

LogLikelihood log_likelihood(const Corpus& corpus, const PhiMatrix& phi, const ThetaMatrix& theta) {
  if (phi.words() != corpus.vocab_size() || theta.documents() != corpus.num_documents() ||
      phi.topics() != theta.topics())
    throw InvalidArgument("log_likelihood: dimension mismatch");
  const EmWorkspace ws(corpus);
  LogLikelihood result;
  for (std::size_t d = 0; d < ws.num_documents(); ++d) {
    const auto th = theta.document(d);
    for (const auto& [w, count] : ws.doc_postings(d)) {
      const auto ph = phi.row(w);
      double mix = 0.0;
      for (std::size_t t = 0; t < ph.size(); ++t) mix += ph[t] * th[t];
      if (!(mix > 0.0)) {
        result.zero_mixture = true;
        result.value = -std::numeric_limits<double>::infinity();
        return result;
      }
      result.value += count * std::log(mix);
    }
  }
  return result;
}

}  // namespace topicent
