#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace topicent {

using WordId = std::uint32_t;

/// Ordered set of unique words; ids are dense in [0, size()).
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Throws InvalidArgument on duplicate words.
  explicit Vocabulary(std::vector<std::string> words);

  /// Returns the id of `word`, inserting it at the end if absent.
  WordId intern(std::string_view word);
  std::optional<WordId> find(std::string_view word) const;

  const std::string& word(WordId id) const { return words_.at(id); }
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  bool operator==(const Vocabulary& other) const { return words_ == other.words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> index_;
};

/// One document: the word-id sequence in reading order.
struct Document {
  std::size_t id = 0;
  std::vector<WordId> tokens;

  std::size_t length() const { return tokens.size(); }
  bool operator==(const Document&) const = default;
};

/// Immutable collection of documents over a fixed vocabulary.
class Corpus {
 public:
  /// Validates ids and non-empty documents; reassigns document ids to 0..D-1.
  Corpus(Vocabulary vocabulary, std::vector<Document> documents);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<Document>& documents() const { return documents_; }
  const Document& document(std::size_t d) const { return documents_[d]; }

  std::size_t num_documents() const { return documents_.size(); }
  std::size_t vocab_size() const { return vocabulary_.size(); }
  std::size_t total_tokens() const { return total_tokens_; }

  /// Corpus-wide frequency of every word, indexed by id.
  std::vector<std::size_t> word_frequencies() const;

  bool operator==(const Corpus& other) const {
    return vocabulary_ == other.vocabulary_ && documents_ == other.documents_;
  }

 private:
  Vocabulary vocabulary_;
  std::vector<Document> documents_;
  std::size_t total_tokens_ = 0;
};

/// Lowercases ASCII, splits on runs of non-alphanumeric bytes (bytes >= 0x80
/// count as letters so UTF-8 words survive), drops tokens shorter than two
/// code points.
std::vector<std::string> tokenize(std::string_view line);

/// One document per line. Empty documents (after filtering) are dropped.
Corpus load_plain_text(const std::filesystem::path& path,
                       const std::optional<std::filesystem::path>& stopwords = std::nullopt);

/// Parses an in-memory text; same rules as load_plain_text.
Corpus parse_plain_text(std::string_view text, const std::vector<std::string>& stopwords = {});

/// UCI bag-of-words: header lines D, W, NNZ then NNZ triples "doc word count"
/// (1-based). Without a vocab file, words are named "w1".."wW".
Corpus load_uci_bow(const std::filesystem::path& docword,
                    const std::optional<std::filesystem::path>& vocab = std::nullopt);

/// Writes the corpus in UCI format. Triples are sorted by (doc, word).
void write_uci_bow(const Corpus& corpus, const std::filesystem::path& docword,
                   const std::filesystem::path& vocab);

}  // namespace topicent
