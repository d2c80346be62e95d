#include "topicent/model.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "topicent/em.hpp"
#include "topicent/error.hpp"
#include "topicent/gibbs.hpp"

namespace topicent {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Plsa: return "plsa";
    case ModelKind::Vlda: return "vlda";
    case ModelKind::LdaGibbs: return "lda-gs";
    case ModelKind::Glda: return "glda";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "plsa") return ModelKind::Plsa;
  if (name == "vlda") return ModelKind::Vlda;
  if (name == "lda-gs") return ModelKind::LdaGibbs;
  if (name == "glda") return ModelKind::Glda;
  throw InvalidArgument(fmt::format("unknown model '{}'", name));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

double PhiMatrix::stochastic_error() const {
  double worst = 0.0;
  for (std::size_t t = 0; t < topics_; ++t) {
    double sum = 0.0;
    for (std::size_t w = 0; w < words_; ++w) {
      const double v = (*this)(w, t);
      if (!in_unit_interval(v)) return kInf;
      sum += v;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double ThetaMatrix::stochastic_error() const {
  double worst = 0.0;
  for (std::size_t d = 0; d < documents_; ++d) {
    double sum = 0.0;
    for (double v : document(d)) {
      if (!in_unit_interval(v)) return kInf;
      sum += v;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

ModelConfig ModelConfig::with_defaults(ModelKind model, std::size_t topics, std::uint64_t seed) {
  ModelConfig c;
  c.model = model;
  c.topics = topics;
  c.alpha = topics > 0 ? 50.0 / static_cast<double>(topics) : 50.0;
  c.beta = 0.01;
  c.seed = seed;
  return c;
}

void ModelConfig::validate() const {
  if (topics < 1) throw InvalidArgument("number of topics must be at least 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be positive and finite");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("beta must be positive and finite");
  if (iterations < 1) throw InvalidArgument("iterations must be at least 1");
}

FitResult fit(const Corpus& corpus, const ModelConfig& config) {
  config.validate();
  if (config.topics > corpus.vocab_size())
    throw InvalidArgument(fmt::format("T = {} exceeds vocabulary size {}", config.topics, corpus.vocab_size()));
  switch (config.model) {
    case ModelKind::Plsa: return fit_plsa(corpus, config);
    case ModelKind::Vlda: return fit_vlda(corpus, config);
    case ModelKind::LdaGibbs: return fit_lda_gs(corpus, config);
    case ModelKind::Glda: return fit_glda(corpus, config);
  }
  throw InvalidArgument("unknown model kind");
}

namespace {

void write_header(std::ostream& out, std::size_t topics) {
  for (std::size_t t = 0; t < topics; ++t) out << (t ? "," : "") << "topic_" << t;
  out << '\n';
}

void write_row(std::ostream& out, std::span<const double> row) {
  for (std::size_t t = 0; t < row.size(); ++t) out << (t ? "," : "") << fmt::format("{:.17g}", row[t]);
  out << '\n';
}

template <class M>
void write_file(const std::filesystem::path& path, const M& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(out, m);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void write_csv(std::ostream& out, const PhiMatrix& phi) {
  write_header(out, phi.topics());
  for (std::size_t w = 0; w < phi.words(); ++w) write_row(out, phi.row(w));
}

void write_csv(std::ostream& out, const ThetaMatrix& theta) {
  write_header(out, theta.topics());
  for (std::size_t d = 0; d < theta.documents(); ++d) write_row(out, theta.document(d));
}

void write_csv(const std::filesystem::path& path, const PhiMatrix& phi) { write_file(path, phi); }
void write_csv(const std::filesystem::path& path, const ThetaMatrix& theta) { write_file(path, theta); }

}  // namespace topicent
