#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "topicent/error.hpp"
#include "topicent/sweep.hpp"

namespace topicent {

namespace {

using nlohmann::ordered_json;

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::string entropy_cells(const std::optional<EntropyPoint>& p, double shannon_classical) {
  if (!p) return fmt::format(",,,{},,", num(shannon_classical));
  return fmt::format("{},{},{},{},{},{}", num(p->energy), num(p->free_energy), num(p->shannon),
                     num(shannon_classical), num(p->renyi), num(p->tsallis));
}

void write_entropy_curve(const SweepReport& report, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "T,run,n_high,rho,prob_mass,energy,free_energy,shannon,shannon_classical,renyi,tsallis\n";
  const auto ts = report.config.t_values();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t r = 0; r < report.config.runs; ++r) {
      const auto& c = report.cell(i, r);
      const double rho = density_of_states(static_cast<double>(c.stats.n_high), report.vocab_size, c.topics);
      out << c.topics << ',' << r << ',' << c.stats.n_high << ',' << num(rho) << ',' << num(c.stats.prob_mass) << ','
          << entropy_cells(c.point, c.shannon_classical) << '\n';
    }
    const auto& a = report.averaged[i];
    out << a.topics << ",avg,";
    if (a.point) {
      out << num(a.n_high) << ',' << num(a.point->rho) << ',' << num(a.prob_mass) << ','
          << entropy_cells(a.point, a.shannon_classical) << '\n';
    } else {
      out << ",,,,,,,,\n";
    }
  }
  finish(out, path);
}

void write_matrix(const JaccardMatrix& m, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_csv(out, m);
  finish(out, path);
}

void write_diagonal(const JaccardMatrix& m, const std::filesystem::path& path) {
  auto out = open_out(path);
  if (m.size() >= 2) {
    const auto curve = diagonal_curve(m);
    write_csv(out, curve);
  } else {
    out << "T,value\n";
  }
  finish(out, path);
}

ordered_json manifest(const SweepReport& report) {
  const auto& c = report.config;
  ordered_json j;
  j["model"] = std::string(to_string(c.model));
  j["t_min"] = c.t_min;
  j["t_max"] = c.t_max;
  j["t_step"] = c.t_step;
  j["runs"] = c.runs;
  j["base_seed"] = c.base_seed;
  j["alpha"] = c.alpha ? ordered_json(*c.alpha) : ordered_json("50/T");
  j["beta"] = c.beta;
  j["iterations"] = c.iterations;
  j["glda_region"] = c.glda_region;
  j["argmax_assignment"] = c.argmax_assignment;
  j["seed_derivation"] = "splitmix64(splitmix64(splitmix64(base_seed) ^ T) ^ run)";
  j["rng"] = "xoshiro256** seeded from splitmix64(seed) ^ splitmix64(~stream)";
  j["corpus"] = {{"documents", report.num_documents},
                 {"vocab_size", report.vocab_size},
                 {"total_tokens", report.total_tokens}};
  ordered_json cells = ordered_json::array();
  for (const auto& cell : report.cells) {
    ordered_json e{{"T", cell.topics}, {"run", cell.run}, {"seed", cell.seed}, {"alpha", cell.alpha},
                   {"beta", c.beta}};
    if (!cell.point) e["degenerate"] = cell.error;
    cells.push_back(std::move(e));
  }
  j["cells"] = std::move(cells);
  j["argmin_renyi"] = report.argmin_renyi ? ordered_json(*report.argmin_renyi) : ordered_json(nullptr);
  return j;
}

}  // namespace

void emit_report(const SweepReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  write_entropy_curve(report, dir / "entropy_curve.csv");
  if (!report.jaccard.empty()) {
    write_matrix(report.jaccard[0], dir / "jaccard_matrix.csv");
    write_diagonal(report.jaccard[0], dir / "jaccard_diagonal.csv");
    for (std::size_t r = 1; r < report.jaccard.size(); ++r)
      write_matrix(report.jaccard[r], dir / fmt::format("jaccard_matrix_run{}.csv", r));
  }

  const auto ts = report.config.t_values();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto path = dir / fmt::format("top_words_T{}.txt", ts[i]);
    auto out = open_out(path);
    for (auto w : report.cell(i, 0).ranked_words) out << report.vocabulary.at(w) << '\n';
    finish(out, path);
  }

  const auto path = dir / "manifest.json";
  auto out = open_out(path);
  out << manifest(report).dump(2) << '\n';
  finish(out, path);
}

std::vector<TopWordSet> read_top_word_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  static const std::regex pattern(R"(top_words_T(\d+)\.txt)");
  std::map<std::size_t, std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::smatch m;
    const auto name = entry.path().filename().string();
    if (std::regex_match(name, m, pattern)) files[std::stoul(m[1].str())] = entry.path();
  }
  if (files.empty()) throw IoError("no top_words_T*.txt files in " + dir.string());

  Vocabulary words;
  std::vector<TopWordSet> sets;
  for (const auto& [t, path] : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<WordId> ids;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) ids.push_back(words.intern(line));
    }
    sets.push_back(TopWordSet::from_ids(t, std::move(ids)));
  }
  return sets;
}

void write_invariance(std::span<const TopWordSet> sets, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const auto m = jaccard_matrix_any(sets);
  write_matrix(m, dir / "jaccard_matrix.csv");
  write_diagonal(m, dir / "jaccard_diagonal.csv");
}

}  // namespace topicent
