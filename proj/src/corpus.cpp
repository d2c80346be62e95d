#include "topicent/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "topicent/error.hpp"

namespace topicent {

Vocabulary::Vocabulary(std::vector<std::string> words) {
  for (auto& w : words) {
    if (find(w)) throw InvalidArgument("duplicate vocabulary word: " + w);
    intern(w);
  }
}

WordId Vocabulary::intern(std::string_view word) {
  std::string key(word);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  auto id = static_cast<WordId>(words_.size());
  words_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<WordId> Vocabulary::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Corpus::Corpus(Vocabulary vocabulary, std::vector<Document> documents)
    : vocabulary_(std::move(vocabulary)), documents_(std::move(documents)) {
  if (documents_.empty()) throw InvalidArgument("corpus has no documents");
  const auto n = vocabulary_.size();
  for (std::size_t d = 0; d < documents_.size(); ++d) {
    auto& doc = documents_[d];
    doc.id = d;
    if (doc.tokens.empty()) throw InvalidArgument("document " + std::to_string(d) + " is empty");
    for (auto w : doc.tokens) {
      if (w >= n) throw InvalidArgument("token id out of vocabulary range in document " + std::to_string(d));
    }
    total_tokens_ += doc.tokens.size();
  }
}

std::vector<std::size_t> Corpus::word_frequencies() const {
  std::vector<std::size_t> freq(vocab_size(), 0);
  for (const auto& doc : documents_)
    for (auto w : doc.tokens) ++freq[w];
  return freq;
}

namespace {

bool is_word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

std::size_t code_points(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && !is_word_byte(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && is_word_byte(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start) continue;
    std::string tok(line.substr(start, i - start));
    for (auto& c : tok)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (code_points(tok) >= 2) out.push_back(std::move(tok));
  }
  return out;
}

Corpus parse_plain_text(std::string_view text, const std::vector<std::string>& stopwords) {
  std::unordered_set<std::string> stop;
  for (const auto& s : stopwords)
    for (auto& t : tokenize(s)) stop.insert(std::move(t));

  Vocabulary vocab;
  std::vector<Document> docs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    Document doc;
    for (auto& tok : tokenize(text.substr(pos, end - pos))) {
      if (stop.contains(tok)) continue;
      doc.tokens.push_back(vocab.intern(tok));
    }
    if (!doc.tokens.empty()) docs.push_back(std::move(doc));
    pos = end + 1;
  }
  if (docs.empty()) throw InvalidArgument("corpus has zero documents after filtering");
  return Corpus(std::move(vocab), std::move(docs));
}

Corpus load_plain_text(const std::filesystem::path& path, const std::optional<std::filesystem::path>& stopwords) {
  std::vector<std::string> stop;
  if (stopwords) stop = read_lines(*stopwords);
  return parse_plain_text(read_file(path), stop);
}

Corpus load_uci_bow(const std::filesystem::path& docword, const std::optional<std::filesystem::path>& vocab_path) {
  std::istringstream in(read_file(docword));
  long long num_docs = 0, num_words = 0, nnz = 0;
  if (!(in >> num_docs >> num_words >> nnz)) throw IoError(docword.string() + ": missing D/W/NNZ header");
  if (num_docs <= 0 || num_words <= 0 || nnz <= 0)
    throw IoError(docword.string() + ": header values must be positive");

  Vocabulary vocab;
  if (vocab_path) {
    auto lines = read_lines(*vocab_path);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (static_cast<long long>(lines.size()) != num_words)
      throw IoError("vocabulary has " + std::to_string(lines.size()) + " words, header says " +
                    std::to_string(num_words));
    try {
      vocab = Vocabulary(std::move(lines));
    } catch (const InvalidArgument& e) {
      throw IoError(e.what());
    }
  } else {
    for (long long w = 1; w <= num_words; ++w) vocab.intern("w" + std::to_string(w));
  }

  // Ordered by doc id; within a doc, triples keep file order.
  std::map<long long, std::vector<WordId>> by_doc;
  long long seen = 0, doc_id = 0, word_id = 0, count = 0;
  while (in >> doc_id) {
    if (!(in >> word_id >> count)) throw IoError(docword.string() + ": truncated triple");
    ++seen;
    if (doc_id < 1 || doc_id > num_docs) throw IoError("docID " + std::to_string(doc_id) + " out of range");
    if (word_id < 1 || word_id > static_cast<long long>(vocab.size()))
      throw IoError("wordID " + std::to_string(word_id) + " exceeds vocabulary size");
    if (count <= 0) throw IoError("non-positive count on triple " + std::to_string(seen));
    auto& toks = by_doc[doc_id];
    toks.insert(toks.end(), static_cast<std::size_t>(count), static_cast<WordId>(word_id - 1));
  }
  if (!in.eof()) throw IoError(docword.string() + ": malformed triple");
  if (seen != nnz)
    throw IoError(docword.string() + ": header NNZ " + std::to_string(nnz) + " but " + std::to_string(seen) +
                  " triples");

  std::vector<Document> docs;
  docs.reserve(by_doc.size());
  for (auto& [id, toks] : by_doc) docs.push_back(Document{0, std::move(toks)});
  return Corpus(std::move(vocab), std::move(docs));
}

void write_uci_bow(const Corpus& corpus, const std::filesystem::path& docword, const std::filesystem::path& vocab) {
  std::vector<std::vector<std::pair<WordId, std::size_t>>> rows(corpus.num_documents());
  std::size_t nnz = 0;
  for (const auto& doc : corpus.documents()) {
    std::map<WordId, std::size_t> counts;
    for (auto w : doc.tokens) ++counts[w];
    rows[doc.id].assign(counts.begin(), counts.end());
    nnz += counts.size();
  }
  std::ofstream out(docword, std::ios::binary);
  if (!out) throw IoError("cannot write " + docword.string());
  out << corpus.num_documents() << '\n' << corpus.vocab_size() << '\n' << nnz << '\n';
  for (std::size_t d = 0; d < rows.size(); ++d)
    for (auto [w, c] : rows[d]) out << d + 1 << ' ' << w + 1 << ' ' << c << '\n';
  std::ofstream vout(vocab, std::ios::binary);
  if (!vout) throw IoError("cannot write " + vocab.string());
  for (const auto& w : corpus.vocabulary().words()) vout << w << '\n';
  if (!out || !vout) throw IoError("write failed");
}

}  // namespace topicent
