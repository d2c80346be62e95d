// Command-line front end: sweep, synth, fit, invariance.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>
#include "CLI11.hpp"

#include "topicent/corpus.hpp"
#include "topicent/error.hpp"
#include "topicent/model.hpp"
#include "topicent/sweep.hpp"
#include "topicent/synthetic.hpp"

namespace fs = std::filesystem;
using namespace topicent;

namespace {

struct CorpusOptions {
  std::string input;
  std::string format = "text";
  std::optional<std::string> vocab;
  std::optional<std::string> stopwords;
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& o) {
  cmd->add_option("--input", o.input, "Corpus file (plain text or UCI docword)")->required();
  cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"text", "uci"}));
  cmd->add_option("--vocab", o.vocab, "UCI vocabulary file");
  cmd->add_option("--stopwords", o.stopwords, "Stopword list for plain text, one per line");
}

Corpus load(const CorpusOptions& o) {
  if (o.format == "uci") {
    std::optional<fs::path> vocab;
    if (o.vocab) vocab = *o.vocab;
    return load_uci_bow(o.input, vocab);
  }
  std::optional<fs::path> stop;
  if (o.stopwords) stop = *o.stopwords;
  return load_plain_text(o.input, stop);
}

const std::vector<std::string> kModels{"plsa", "vlda", "lda-gs", "glda"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic models with Renyi/Tsallis entropy selection of the topic count"};
  app.require_subcommand(1);

  // sweep
  CorpusOptions sweep_corpus;
  SweepConfig sweep;
  std::string sweep_model = "lda-gs";
  std::optional<double> sweep_alpha;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Fit a model over a range of T and write entropy curves");
  sweep_cmd->add_option("--model", sweep_model, "Model")->required()->check(CLI::IsMember(kModels));
  add_corpus_options(sweep_cmd, sweep_corpus);
  sweep_cmd->add_option("--t-min", sweep.t_min)->required();
  sweep_cmd->add_option("--t-max", sweep.t_max)->required();
  sweep_cmd->add_option("--t-step", sweep.t_step)->capture_default_str();
  sweep_cmd->add_option("--runs", sweep.runs)->capture_default_str();
  sweep_cmd->add_option("--iterations", sweep.iterations)->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep_alpha, "Document-topic smoothing (default 50/T)");
  sweep_cmd->add_option("--beta", sweep.beta, "Topic-word smoothing")->capture_default_str();
  sweep_cmd->add_option("--glda-region", sweep.glda_region)->capture_default_str();
  sweep_cmd->add_flag("--argmax", sweep.argmax_assignment, "Gibbs models: take the most probable topic");
  sweep_cmd->add_option("--seed", sweep.base_seed)->required();
  sweep_cmd->add_option("--out", sweep_out)->required();

  // synth
  std::size_t syn_k = 10, syn_n = 1000, syn_d = 2000, syn_len = 100;
  double syn_alpha = 0.1, syn_beta = 0.05;
  std::uint64_t syn_seed = 0;
  std::string syn_out;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a planted-topic corpus in UCI format");
  synth_cmd->add_option("--topics", syn_k)->required();
  synth_cmd->add_option("--vocab", syn_n)->required();
  synth_cmd->add_option("--docs", syn_d)->required();
  synth_cmd->add_option("--doc-len", syn_len)->required();
  synth_cmd->add_option("--alpha", syn_alpha)->required();
  synth_cmd->add_option("--beta", syn_beta)->required();
  synth_cmd->add_option("--seed", syn_seed)->required();
  synth_cmd->add_option("--out", syn_out)->required();

  // fit
  CorpusOptions fit_corpus;
  std::string fit_model = "lda-gs";
  std::size_t fit_topics = 0;
  std::optional<double> fit_alpha;
  ModelConfig fit_cfg;
  std::string fit_out;
  auto* fit_cmd = app.add_subcommand("fit", "Fit one model and export phi/theta as CSV");
  fit_cmd->add_option("--model", fit_model)->required()->check(CLI::IsMember(kModels));
  add_corpus_options(fit_cmd, fit_corpus);
  fit_cmd->add_option("--topics", fit_topics)->required();
  fit_cmd->add_option("--iterations", fit_cfg.iterations)->capture_default_str();
  fit_cmd->add_option("--alpha", fit_alpha, "Document-topic smoothing (default 50/T)");
  fit_cmd->add_option("--beta", fit_cfg.beta)->capture_default_str();
  fit_cmd->add_option("--glda-region", fit_cfg.glda_region)->capture_default_str();
  fit_cmd->add_flag("--argmax", fit_cfg.argmax_assignment);
  fit_cmd->add_option("--seed", fit_cfg.seed)->required();
  fit_cmd->add_option("--out", fit_out)->required();

  // invariance
  std::string inv_in, inv_out;
  auto* inv_cmd = app.add_subcommand("invariance", "Recompute Jaccard artifacts from top_words_T*.txt files");
  inv_cmd->add_option("--input", inv_in, "Directory holding top_words_T*.txt")->required();
  inv_cmd->add_option("--out", inv_out, "Output directory (default: the input directory)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep_cmd) {
      sweep.model = parse_model_kind(sweep_model);
      sweep.alpha = sweep_alpha;
      const auto corpus = load(sweep_corpus);
      const auto report = run_sweep(corpus, sweep);
      emit_report(report, sweep_out);
      if (report.argmin_renyi)
        std::cout << fmt::format("argmin_renyi T={}\n", *report.argmin_renyi);
      else
        std::cout << "argmin_renyi none (all points degenerate)\n";
    } else if (*synth_cmd) {
      const auto syn = generate_synthetic(syn_k, syn_n, syn_d, syn_len, syn_alpha, syn_beta, syn_seed);
      fs::create_directories(syn_out);
      write_uci_bow(syn.corpus, fs::path(syn_out) / "docword.txt", fs::path(syn_out) / "vocab.txt");
      write_csv(fs::path(syn_out) / "true_phi.csv", syn.true_phi);
    } else if (*fit_cmd) {
      const auto corpus = load(fit_corpus);
      auto cfg = ModelConfig::with_defaults(parse_model_kind(fit_model), fit_topics, fit_cfg.seed);
      if (fit_alpha) cfg.alpha = *fit_alpha;
      cfg.beta = fit_cfg.beta;
      cfg.iterations = fit_cfg.iterations;
      cfg.glda_region = fit_cfg.glda_region;
      cfg.argmax_assignment = fit_cfg.argmax_assignment;
      const auto result = fit(corpus, cfg);
      fs::create_directories(fit_out);
      write_csv(fs::path(fit_out) / "phi.csv", result.phi);
      write_csv(fs::path(fit_out) / "theta.csv", result.theta);
      std::cout << fmt::format("model={} T={} alpha={} beta={} iterations={} seed={}\n", to_string(cfg.model),
                               cfg.topics, cfg.alpha, cfg.beta, cfg.iterations, cfg.seed);
    } else if (*inv_cmd) {
      const auto sets = read_top_word_files(inv_in);
      write_invariance(sets, inv_out.empty() ? inv_in : inv_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
