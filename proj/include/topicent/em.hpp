#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "topicent/corpus.hpp"
#include "topicent/model.hpp"

namespace topicent {

/// Sparse word-document counts n_wd, indexed both ways. Both postings lists
/// are sorted (by word within a document, by document within a word), which
/// fixes the floating-point summation order of every EM reduction.
class EmWorkspace {
 public:
  struct Entry {
    std::uint32_t id;  // word id in doc postings, document id in word postings
    double count;
  };

  explicit EmWorkspace(const Corpus& corpus);

  std::size_t num_documents() const { return doc_postings_.size(); }
  std::size_t vocab_size() const { return word_postings_.size(); }
  double total_tokens() const { return total_tokens_; }

  const std::vector<Entry>& doc_postings(std::size_t d) const { return doc_postings_[d]; }
  const std::vector<Entry>& word_postings(std::size_t w) const { return word_postings_[w]; }
  double doc_length(std::size_t d) const { return doc_lengths_[d]; }

 private:
  std::vector<std::vector<Entry>> doc_postings_;
  std::vector<std::vector<Entry>> word_postings_;
  std::vector<double> doc_lengths_;
  double total_tokens_ = 0.0;
};

/// Floor applied to p(w|d) before taking its log.
inline constexpr double kMixtureFloor = 1e-300;

/// Random column-stochastic starting point: every phi column and every theta
/// column is drawn from Dirichlet(1), phi from stream 0 then theta from
/// stream 1 of the config seed.
std::pair<PhiMatrix, ThetaMatrix> random_initialization(const Corpus& corpus, const ModelConfig& config);

/// pLSA by EM. loglik_trace[i] is the log-likelihood after iteration i.
FitResult fit_plsa(const Corpus& corpus, const ModelConfig& config);

/// Dirichlet-smoothed EM: the M-step uses
///   phi = (n_wt + beta) / (n_t + N beta),  theta = (n_td + alpha) / (n_d + T alpha)
/// with expected counts from the E-step. loglik_trace records the objective
/// that this update is guaranteed to increase: the log-likelihood plus
/// beta * sum ln phi + alpha * sum ln theta.
FitResult fit_vlda(const Corpus& corpus, const ModelConfig& config);

/// Same as the fits above but starting from the given matrices.
FitResult fit_plsa_from(const Corpus& corpus, const ModelConfig& config, PhiMatrix phi, ThetaMatrix theta);
FitResult fit_vlda_from(const Corpus& corpus, const ModelConfig& config, PhiMatrix phi, ThetaMatrix theta);

struct LogLikelihood {
  double value = 0.0;
  /// Some observed (w, d) pair had p(w|d) = 0; value is then -inf.
  bool zero_mixture = false;
};

/// sum_d sum_w n_wd ln sum_t phi_wt theta_td.
LogLikelihood log_likelihood(const Corpus& corpus, const PhiMatrix& phi, const ThetaMatrix& theta);

}  // namespace topicent
