#pragma once

// Data-parallel kernels. Each kernel exists twice: a single-threaded
// reference in `serial` and an OpenMP version in `omp`. Both produce
// bit-identical output for the same input, independent of thread count; the
// test suite checks this and the benchmark target compares their speed.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "topicent/corpus.hpp"
#include "topicent/em.hpp"
#include "topicent/model.hpp"

namespace topicent::kernels {

/// Output of one E-step.
struct ExpectedCounts {
  std::vector<double> word_topic;  // N x T, row-major
  std::vector<double> doc_topic;   // D x T, row-major
  /// sum_d sum_w n_wd ln max(p(w|d), kMixtureFloor), for the input parameters.
  double loglik = 0.0;
  bool zero_mixture = false;
};

struct HighProbStats {
  std::size_t n_high = 0;  // #{(w,t) : phi_wt > 1/N}
  double prob_mass = 0.0;  // sum of those entries
};

namespace serial {
void expectation(const EmWorkspace& ws, const PhiMatrix& phi, const ThetaMatrix& theta, ExpectedCounts& out);
HighProbStats scan_high_prob(const PhiMatrix& phi);
/// Upper triangle (i <= j) of the pairwise Jaccard matrix, row-major n x n,
/// mirrored into the lower triangle. Sets must be sorted and unique.
std::vector<std::optional<double>> jaccard_cells(std::span<const std::vector<WordId>> sets);
}  // namespace serial

namespace omp {
void expectation(const EmWorkspace& ws, const PhiMatrix& phi, const ThetaMatrix& theta, ExpectedCounts& out);
HighProbStats scan_high_prob(const PhiMatrix& phi);
std::vector<std::optional<double>> jaccard_cells(std::span<const std::vector<WordId>> sets);
}  // namespace omp

/// |a ∩ b| / |a ∪ b| of two sorted unique id lists; nullopt when both are empty.
std::optional<double> jaccard_sorted(std::span<const WordId> a, std::span<const WordId> b);

}  // namespace topicent::kernels
