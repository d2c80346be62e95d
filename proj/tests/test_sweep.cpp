#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "topicent/error.hpp"
#include "topicent/rng.hpp"
#include "topicent/sweep.hpp"
#include "topicent/synthetic.hpp"

using namespace topicent;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("topicent_test_sweep_" + name);
  fs::remove_all(dir);
  return dir;
}

SweepConfig small_config(ModelKind kind) {
  SweepConfig c;
  c.model = kind;
  c.t_min = 2;
  c.t_max = 6;
  c.t_step = 2;
  c.runs = 2;
  c.base_seed = 11;
  c.iterations = 15;
  return c;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("seed derivation") {
  CHECK(derive_seed(5, 10, 2) == splitmix64(splitmix64(splitmix64(5) ^ 10) ^ 2));
  CHECK(derive_seed(5, 10, 2) != derive_seed(5, 10, 1));
  CHECK(derive_seed(5, 10, 2) != derive_seed(5, 12, 2));
}

TEST_CASE("sweep config validation and T grid") {
  SweepConfig c;
  c.t_min = 2;
  c.t_max = 9;
  c.t_step = 3;
  CHECK(c.t_values() == std::vector<std::size_t>{2, 5, 8});
  c.t_step = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SweepConfig{};
  c.t_min = 1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SweepConfig{};
  c.runs = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = SweepConfig{};
  CHECK(c.model_config(10, 0).alpha == doctest::Approx(5.0));
  c.alpha = 0.3;
  CHECK(c.model_config(10, 0).alpha == 0.3);
  CHECK(c.model_config(10, 1).seed == derive_seed(c.base_seed, 10, 1));
}

TEST_CASE("sweep cells are reproducible in isolation") {
  const auto corpus = oracle::random_corpus(30, 40, 10, 30, 2);
  for (auto kind : {ModelKind::Plsa, ModelKind::LdaGibbs}) {
    const auto cfg = small_config(kind);
    const auto report = run_sweep(corpus, cfg);
    REQUIRE(report.cells.size() == 6);
    const auto again = run_cell(corpus, cfg, 4, 1);
    const auto& c = report.cell(1, 1);
    CHECK(c.topics == 4);
    CHECK(c.run == 1);
    CHECK(c.seed == again.seed);
    CHECK(c.stats.n_high == again.stats.n_high);
    CHECK(c.stats.prob_mass == again.stats.prob_mass);
    CHECK(c.top_words.words == again.top_words.words);
    CHECK(c.ranked_words == again.ranked_words);
    CHECK(report.jaccard.size() == 2);
  }
}

TEST_CASE("averaging a single run reproduces that run") {
  const auto corpus = oracle::random_corpus(30, 40, 10, 30, 3);
  auto cfg = small_config(ModelKind::Plsa);
  cfg.runs = 1;
  const auto report = run_sweep(corpus, cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = report.cell(i, 0);
    const auto& a = report.averaged[i];
    REQUIRE(c.point);
    REQUIRE(a.point);
    CHECK(a.used_runs == 1);
    CHECK(a.point->renyi == c.point->renyi);
    CHECK(a.point->shannon == c.point->shannon);
    CHECK(a.shannon_classical == c.shannon_classical);
  }
}

TEST_CASE("argmin of the averaged Renyi curve") {
  const auto corpus = oracle::random_corpus(30, 40, 10, 30, 4);
  const auto report = run_sweep(corpus, small_config(ModelKind::Vlda));
  REQUIRE(report.argmin_renyi);
  double best = 1e300;
  std::size_t best_t = 0;
  for (const auto& a : report.averaged)
    if (a.point && a.point->renyi < best) {
      best = a.point->renyi;
      best_t = a.topics;
    }
  CHECK(*report.argmin_renyi == best_t);
}

TEST_CASE("single-T sweep") {
  const auto corpus = oracle::random_corpus(20, 30, 10, 20, 5);
  auto cfg = small_config(ModelKind::Plsa);
  cfg.t_min = cfg.t_max = 4;
  cfg.runs = 1;
  const auto report = run_sweep(corpus, cfg);
  REQUIRE(report.jaccard.size() == 1);
  REQUIRE(report.jaccard[0].size() == 1);
  CHECK(report.jaccard[0](0, 0) == 1.0);
  const auto dir = scratch("single");
  emit_report(report, dir);
  CHECK(count_lines(slurp(dir / "entropy_curve.csv")) == 3);
  CHECK(slurp(dir / "jaccard_diagonal.csv") == "T,value\n");
  fs::remove_all(dir);
}

TEST_CASE("report files") {
  const auto corpus = oracle::random_corpus(30, 40, 10, 30, 6);
  const auto report = run_sweep(corpus, small_config(ModelKind::LdaGibbs));
  const auto a = scratch("a"), b = scratch("b");
  emit_report(report, a);
  emit_report(run_sweep(corpus, small_config(ModelKind::LdaGibbs)), b);

  for (const char* name : {"entropy_curve.csv", "jaccard_matrix.csv", "jaccard_diagonal.csv", "jaccard_matrix_run1.csv",
                           "top_words_T2.txt", "top_words_T4.txt", "top_words_T6.txt", "manifest.json"}) {
    INFO(name);
    REQUIRE(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
  }

  CHECK(count_lines(slurp(a / "jaccard_matrix.csv")) == 4);
  CHECK(count_lines(slurp(a / "jaccard_diagonal.csv")) == 3);
  // 3 T values x (2 runs + avg) + header.
  CHECK(count_lines(slurp(a / "entropy_curve.csv")) == 10);

  const auto m = nlohmann::json::parse(slurp(a / "manifest.json"));
  CHECK(m["model"] == "lda-gs");
  CHECK(m["base_seed"] == 11);
  CHECK(m["cells"].size() == 6);
  CHECK(m["cells"][3]["seed"] == derive_seed(11, 4, 1));
  CHECK(m["corpus"]["documents"] == 30);

  // Top-word files read back into the same Jaccard matrix.
  const auto sets = read_top_word_files(a);
  REQUIRE(sets.size() == 3);
  CHECK(sets[1].topics == 4);
  const auto c = scratch("c");
  write_invariance(sets, c);
  CHECK(slurp(c / "jaccard_matrix.csv") == slurp(a / "jaccard_matrix.csv"));
  CHECK(slurp(c / "jaccard_diagonal.csv") == slurp(a / "jaccard_diagonal.csv"));

  for (const auto& d : {a, b, c}) fs::remove_all(d);
}

TEST_CASE("degenerate cells do not abort the sweep") {
  // Every document is the same single word pair, so with large T most topic
  // columns stay at the uniform-or-flat level and nothing exceeds 1/N.
  const auto corpus = parse_plain_text("aa bb cc dd\naa bb cc dd\naa bb cc dd");
  SweepConfig cfg;
  cfg.model = ModelKind::Plsa;
  cfg.t_min = 2;
  cfg.t_max = 4;
  cfg.runs = 1;
  cfg.iterations = 5;
  const auto report = run_sweep(corpus, cfg);
  CHECK(report.cells.size() == 2);
  for (const auto& c : report.cells)
    if (!c.point) CHECK_FALSE(c.error.empty());
}

TEST_CASE("T above the vocabulary size is rejected") {
  const auto corpus = oracle::random_corpus(5, 6, 3, 5, 1);
  SweepConfig cfg;
  cfg.t_max = 8;
  CHECK_THROWS_AS(run_sweep(corpus, cfg), InvalidArgument);
}

TEST_CASE("synthetic corpus") {
  const auto a = generate_synthetic(3, 50, 20, 30, 0.1, 0.1, 4);
  const auto b = generate_synthetic(3, 50, 20, 30, 0.1, 0.1, 4);
  CHECK(a.corpus == b.corpus);
  CHECK(std::ranges::equal(a.true_phi.values(), b.true_phi.values()));
  CHECK(a.corpus.num_documents() == 20);
  CHECK(a.corpus.total_tokens() == 600);
  CHECK(a.corpus.vocabulary().word(0) == "w0");
  CHECK(a.true_phi.stochastic_error() < 1e-12);

  // One topic fitted with one topic recovers the generating distribution.
  const auto one = generate_synthetic(1, 20, 1000, 100, 1.0, 1.0, 9);
  const auto fit_phi = fit(one.corpus, ModelConfig::with_defaults(ModelKind::Plsa, 1, 1)).phi;
  for (std::size_t w = 0; w < 20; ++w) {
    const auto id = one.corpus.vocabulary().find("w" + std::to_string(w));
    if (!id) {
      CHECK(one.true_phi(w, 0) < 1e-3);
      continue;
    }
    CHECK(std::abs(fit_phi(*id, 0) - one.true_phi(w, 0)) < 0.02);
  }
}
