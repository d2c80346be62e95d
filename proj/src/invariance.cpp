#include "topicent/invariance.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "topicent/error.hpp"
#include "topicent/kernels.hpp"

namespace topicent {

TopWordSet TopWordSet::from_ids(std::size_t topics, std::vector<WordId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return TopWordSet{topics, std::move(ids)};
}

JaccardMatrix::JaccardMatrix(std::vector<std::size_t> t_values, std::vector<std::optional<double>> values)
    : t_values_(std::move(t_values)), values_(std::move(values)) {
  if (values_.size() != t_values_.size() * t_values_.size())
    throw InvalidArgument("Jaccard matrix size does not match its T values");
}

namespace {

/// Largest probability of each word over topics; zero-sized when N = 0.
std::vector<double> max_over_topics(const PhiMatrix& phi) {
  std::vector<double> best(phi.words(), 0.0);
  for (std::size_t w = 0; w < phi.words(); ++w)
    for (double v : phi.row(w)) best[w] = std::max(best[w], v);
  return best;
}

}  // namespace

TopWordSet top_words(const PhiMatrix& phi) {
  TopWordSet set{phi.topics(), {}};
  if (phi.words() == 0) return set;
  const double threshold = 1.0 / static_cast<double>(phi.words());
  const auto best = max_over_topics(phi);
  for (std::size_t w = 0; w < best.size(); ++w)
    if (best[w] > threshold) set.words.push_back(static_cast<WordId>(w));
  return set;
}

std::vector<WordId> ranked_top_words(const PhiMatrix& phi) {
  auto ids = top_words(phi).words;
  const auto best = max_over_topics(phi);
  std::stable_sort(ids.begin(), ids.end(), [&](WordId a, WordId b) { return best[a] > best[b]; });
  return ids;
}

std::optional<double> jaccard(const TopWordSet& a, const TopWordSet& b) {
  return kernels::jaccard_sorted(a.words, b.words);
}

JaccardMatrix jaccard_matrix_any(std::span<const TopWordSet> solutions) {
  if (solutions.empty()) throw InvalidArgument("Jaccard matrix needs at least one solution");
  std::vector<std::vector<WordId>> sets;
  std::vector<std::size_t> t_values;
  sets.reserve(solutions.size());
  for (const auto& s : solutions) {
    sets.push_back(s.words);
    t_values.push_back(s.topics);
  }
  return JaccardMatrix(std::move(t_values), kernels::omp::jaccard_cells(sets));
}

JaccardMatrix jaccard_matrix(std::span<const TopWordSet> solutions) {
  if (solutions.size() < 2) throw InvalidArgument("Jaccard matrix needs at least two solutions");
  return jaccard_matrix_any(solutions);
}

std::vector<DiagonalPoint> diagonal_curve(const JaccardMatrix& matrix) {
  if (matrix.size() < 2) throw InvalidArgument("diagonal curve needs at least two solutions");
  std::vector<DiagonalPoint> curve;
  for (std::size_t i = 0; i + 1 < matrix.size(); ++i) curve.push_back({matrix.t_values()[i], matrix(i, i + 1)});
  return curve;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? fmt::format("{:.6f}", *v) : std::string(); }

}  // namespace

void write_csv(std::ostream& out, const JaccardMatrix& matrix) {
  out << "T";
  for (auto t : matrix.t_values()) out << ',' << t;
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << matrix.t_values()[i];
    for (std::size_t j = 0; j < matrix.size(); ++j) out << ',' << cell(matrix(i, j));
    out << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const DiagonalPoint> curve) {
  out << "T,value\n";
  for (const auto& p : curve) out << p.topics << ',' << cell(p.value) << '\n';
}

}  // namespace topicent
