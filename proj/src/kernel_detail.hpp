#pragma once

// Inner loops shared by the serial and OpenMP kernels. Keeping them in one
// place is what makes the two paths bit-identical.

#include <cmath>
#include <cstddef>
#include <span>

#include "topicent/em.hpp"

namespace topicent::kernels::detail {

struct Mixture {
  double value;  // floored p(w|d)
  bool zero;
};

/// Writes p(t|d,w) into `post` and returns p(w|d).
inline Mixture posterior(std::span<const double> phi_row, std::span<const double> theta_doc,
                         std::span<double> post) {
  double mix = 0.0;
  for (std::size_t t = 0; t < post.size(); ++t) {
    post[t] = phi_row[t] * theta_doc[t];
    mix += post[t];
  }
  const bool zero = !(mix > 0.0);
  if (mix < kMixtureFloor) mix = kMixtureFloor;
  for (auto& p : post) p /= mix;
  return {mix, zero};
}

inline void accumulate(std::span<double> target, std::span<const double> post, double count) {
  for (std::size_t t = 0; t < post.size(); ++t) target[t] += count * post[t];
}

/// Per-topic partial sums over words in id order.
inline void scan_topic(const PhiMatrix& phi, std::size_t t, double threshold, std::size_t& count, double& mass) {
  count = 0;
  mass = 0.0;
  for (std::size_t w = 0; w < phi.words(); ++w) {
    const double v = phi(w, t);
    if (v > threshold) {
      ++count;
      mass += v;
    }
  }
}

inline double high_threshold(const PhiMatrix& phi) { return 1.0 / static_cast<double>(phi.words()); }

}  // namespace topicent::kernels::detail
