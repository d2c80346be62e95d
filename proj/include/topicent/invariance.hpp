#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topicent/corpus.hpp"
#include "topicent/model.hpp"

namespace topicent {

/// Words whose probability exceeds 1/N in at least one topic.
struct TopWordSet {
  std::size_t topics = 0;
  std::vector<WordId> words;  // sorted, unique

  /// Sorts and deduplicates `ids`.
  static TopWordSet from_ids(std::size_t topics, std::vector<WordId> ids);
};

class JaccardMatrix {
 public:
  JaccardMatrix(std::vector<std::size_t> t_values, std::vector<std::optional<double>> values);

  const std::vector<std::size_t>& t_values() const { return t_values_; }
  std::size_t size() const { return t_values_.size(); }
  std::optional<double> operator()(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }

 private:
  std::vector<std::size_t> t_values_;
  std::vector<std::optional<double>> values_;
};

struct DiagonalPoint {
  std::size_t topics;  // T of the earlier solution in the pair
  std::optional<double> value;
};

TopWordSet top_words(const PhiMatrix& phi);

/// Top words ordered by their largest probability over topics, descending;
/// ties by id.
std::vector<WordId> ranked_top_words(const PhiMatrix& phi);

/// Intersection over union; nullopt when both sets are empty.
std::optional<double> jaccard(const TopWordSet& a, const TopWordSet& b);

/// Pairwise matrix over solutions, computed on the upper triangle and
/// mirrored. Requires at least two solutions.
JaccardMatrix jaccard_matrix(std::span<const TopWordSet> solutions);

/// Like jaccard_matrix but also accepts a single solution.
JaccardMatrix jaccard_matrix_any(std::span<const TopWordSet> solutions);

/// Similarity of each solution to its successor. Requires size() >= 2.
std::vector<DiagonalPoint> diagonal_curve(const JaccardMatrix& matrix);

/// First row and column hold the T values, body cells six decimals, missing
/// values empty.
void write_csv(std::ostream& out, const JaccardMatrix& matrix);
/// Header "T,value".
void write_csv(std::ostream& out, std::span<const DiagonalPoint> curve);

}  // namespace topicent
