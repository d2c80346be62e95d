#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topicent/corpus.hpp"

namespace topicent {

enum class ModelKind { Plsa, Vlda, LdaGibbs, Glda };

std::string_view to_string(ModelKind kind);
/// Accepts "plsa", "vlda", "lda-gs", "glda".
ModelKind parse_model_kind(std::string_view name);

/// p(w|t): words x topics, stored row-major (one row per word). Each topic
/// column sums to one.
class PhiMatrix {
 public:
  PhiMatrix() = default;
  PhiMatrix(std::size_t words, std::size_t topics, double fill = 0.0)
      : words_(words), topics_(topics), values_(words * topics, fill) {}

  std::size_t words() const { return words_; }
  std::size_t topics() const { return topics_; }

  double operator()(std::size_t w, std::size_t t) const { return values_[w * topics_ + t]; }
  double& operator()(std::size_t w, std::size_t t) { return values_[w * topics_ + t]; }
  std::span<const double> row(std::size_t w) const { return {values_.data() + w * topics_, topics_}; }
  std::span<double> row(std::size_t w) { return {values_.data() + w * topics_, topics_}; }
  std::span<const double> values() const { return values_; }

  /// Largest |sum_w p(w|t) - 1| over topics, or +inf if any entry leaves [0,1].
  double stochastic_error() const;

  bool operator==(const PhiMatrix&) const = default;

 private:
  std::size_t words_ = 0;
  std::size_t topics_ = 0;
  std::vector<double> values_;
};

/// p(t|d): logically topics x documents; stored with one row per document.
/// Each document's topic distribution sums to one.
class ThetaMatrix {
 public:
  ThetaMatrix() = default;
  ThetaMatrix(std::size_t topics, std::size_t documents, double fill = 0.0)
      : topics_(topics), documents_(documents), values_(topics * documents, fill) {}

  std::size_t topics() const { return topics_; }
  std::size_t documents() const { return documents_; }

  double operator()(std::size_t t, std::size_t d) const { return values_[d * topics_ + t]; }
  double& operator()(std::size_t t, std::size_t d) { return values_[d * topics_ + t]; }
  std::span<const double> document(std::size_t d) const { return {values_.data() + d * topics_, topics_}; }
  std::span<double> document(std::size_t d) { return {values_.data() + d * topics_, topics_}; }
  std::span<const double> values() const { return values_; }

  double stochastic_error() const;

  bool operator==(const ThetaMatrix&) const = default;

 private:
  std::size_t topics_ = 0;
  std::size_t documents_ = 0;
  std::vector<double> values_;
};

struct ModelConfig {
  ModelKind model = ModelKind::LdaGibbs;
  std::size_t topics = 2;
  /// Document-topic smoothing (all models that smooth).
  double alpha = 25.0;
  /// Topic-word smoothing.
  double beta = 0.01;
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
  /// Half-width of a GLDA granule; a granule spans 2r+1 tokens.
  std::size_t glda_region = 1;
  /// Gibbs models only: pick the most probable topic instead of sampling.
  bool argmax_assignment = false;

  /// alpha = 50/T, beta = 0.01.
  static ModelConfig with_defaults(ModelKind model, std::size_t topics, std::uint64_t seed = 0);

  /// Throws InvalidArgument.
  void validate() const;

  bool operator==(const ModelConfig&) const = default;
};

struct FitResult {
  PhiMatrix phi;
  ThetaMatrix theta;
  /// EM models: objective after each iteration. Empty for Gibbs models.
  std::vector<double> loglik_trace;
  ModelConfig config;

  bool operator==(const FitResult&) const = default;
};

/// Dispatches to the model named in `config`. Throws InvalidArgument when
/// the config is invalid or T exceeds the vocabulary size.
FitResult fit(const Corpus& corpus, const ModelConfig& config);

/// Row-major CSV, header "topic_0,...,topic_{T-1}", one row per word
/// (phi) or document (theta), 17 significant digits.
void write_csv(std::ostream& out, const PhiMatrix& phi);
void write_csv(std::ostream& out, const ThetaMatrix& theta);
void write_csv(const std::filesystem::path& path, const PhiMatrix& phi);
void write_csv(const std::filesystem::path& path, const ThetaMatrix& theta);

}  // namespace topicent
