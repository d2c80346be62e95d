#pragma once

#include <cstddef>
#include <cstdint>

#include "topicent/corpus.hpp"
#include "topicent/model.hpp"

namespace topicent {

struct SyntheticCorpus {
  Corpus corpus;
  PhiMatrix true_phi;
};

/// Planted-topic corpus. K topic-word distributions are drawn from
/// Dirichlet(beta) (stream 0), then for each document a mixture from
/// Dirichlet(alpha) and doc_len tokens by topic-then-word draws (stream 1).
/// Words are named "w0".."w{N-1}".
SyntheticCorpus generate_synthetic(std::size_t topics, std::size_t vocab_size, std::size_t documents,
                                   std::size_t doc_len, double alpha, double beta, std::uint64_t seed);

}  // namespace topicent
