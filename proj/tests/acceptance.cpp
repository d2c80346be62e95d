// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "topicent/em.hpp"
#include "topicent/entropy.hpp"
#include "topicent/gibbs.hpp"
#include "topicent/invariance.hpp"
#include "topicent/sweep.hpp"
#include "topicent/synthetic.hpp"

using namespace topicent;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const Outcome& o) {
  if (!o.pass) ++failures;
  fmt::print("{} {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
  std::fflush(stdout);
}

void check(const std::string& name, const std::function<Outcome()>& body) {
  try {
    report(name, body());
  } catch (const std::exception& e) {
    report(name, {false, std::string("exception: ") + e.what()});
  }
}

Outcome algebraic_oracle() {
  const auto start = Clock::now();
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> size(1, 50);
  std::exponential_distribution<double> e(1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> p(size(gen));
    double s = 0.0;
    for (auto& v : p) s += v = e(gen);
    for (auto& v : p) v /= s;
    const DiscreteDistribution dist(p);
    for (double q : {0.1, 0.5, 2.0, 3.0}) {
      // Consistent-sign transform: (e^{(1-q)R} - 1) / (1 - q).
      const double via_renyi = std::expm1((1.0 - q) * renyi_direct(dist, q)) / (1.0 - q);
      const double diff = std::abs(tsallis_direct(dist, q) - via_renyi);
      worst = std::max(worst, diff);
    }
  }
  const double t = seconds_since(start);
  return {worst <= 1e-12 && t < 1.0, fmt::format("max |diff| = {:.3g}, {:.3f} s", worst, t)};
}

Outcome worked_case() {
  PhiMatrix phi(4, 2);
  phi(0, 0) = phi(1, 0) = 0.5;
  phi(2, 1) = phi(3, 1) = 0.5;
  const auto pt = evaluate_solution(phi);
  const double ln4 = 2.0 * std::log(2.0);
  const double err = std::max({std::abs(pt.rho - 0.5), std::abs(pt.energy), std::abs(pt.free_energy - ln4),
                               std::abs(pt.renyi - ln4), std::abs(pt.tsallis - 1.0)});
  return {err <= 1e-12, fmt::format("rho={} E={} F={} renyi={} tsallis={}, max err {:.3g}", pt.rho, pt.energy,
                                    pt.free_energy, pt.renyi, pt.tsallis, err)};
}

Outcome em_monotonicity() {
  const auto start = Clock::now();
  double worst = 0.0;
  std::size_t traces = 0;
  for (unsigned c = 0; c < 20; ++c) {
    const auto corpus = oracle::random_corpus(50, 100, 20, 80, 100 + c);
    for (auto kind : {ModelKind::Plsa, ModelKind::Vlda}) {
      auto cfg = ModelConfig::with_defaults(kind, 5, c);
      cfg.iterations = 100;
      const auto r = kind == ModelKind::Plsa ? fit_plsa(corpus, cfg) : fit_vlda(corpus, cfg);
      for (std::size_t i = 1; i < r.loglik_trace.size(); ++i)
        worst = std::max(worst, r.loglik_trace[i - 1] - r.loglik_trace[i]);
      ++traces;
    }
  }
  const double t = seconds_since(start);
  return {worst <= 1e-8 && t < 30.0,
          fmt::format("{} traces, largest per-step decrease {:.3g}, {:.2f} s", traces, worst, t)};
}

Outcome gibbs_micro() {
  const auto start = Clock::now();
  const auto corpus = parse_plain_text("aa bb");
  const unsigned topics = 2;
  auto base = ModelConfig::with_defaults(ModelKind::LdaGibbs, topics, 0);
  base.iterations = 20;
  const auto exact = oracle::collapsed_posterior({{0, 1}}, 2, topics, base.alpha, base.beta);
  const int runs = 100000;
  std::vector<double> hist(exact.size(), 0.0);
  for (int s = 0; s < runs; ++s) {
    auto cfg = base;
    cfg.seed = static_cast<std::uint64_t>(s);
    const auto tables = sample_lda_gs(corpus, cfg);
    hist[tables.assignments[0] * topics + tables.assignments[1]] += 1.0 / runs;
  }
  double tv = 0.0;
  for (std::size_t k = 0; k < exact.size(); ++k) tv += 0.5 * std::abs(hist[k] - exact[k]);
  const double t = seconds_since(start);
  return {tv <= 0.01 && t < 60.0, fmt::format("TV = {:.4f} over {} runs, {:.2f} s", tv, runs, t)};
}

Outcome glda_degeneracy() {
  const auto syn = generate_synthetic(5, 300, 200, 50, 0.1, 0.05, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto lda = ModelConfig::with_defaults(ModelKind::LdaGibbs, 8, seed);
    auto glda = ModelConfig::with_defaults(ModelKind::Glda, 8, seed);
    glda.glda_region = 0;
    const auto a = fit_lda_gs(syn.corpus, lda);
    const auto b = fit_glda(syn.corpus, glda);
    if (!std::ranges::equal(a.phi.values(), b.phi.values()) ||
        !std::ranges::equal(a.theta.values(), b.theta.values()))
      return {false, fmt::format("seed {} differs", seed)};
  }
  return {true, "10 seeds, phi and theta identical"};
}

struct PlantedSweeps {
  SweepReport lda;
  SweepReport plsa;
  double seconds = 0.0;
};

PlantedSweeps planted_sweeps() {
  const auto start = Clock::now();
  const auto syn = generate_synthetic(10, 1000, 2000, 100, 0.1, 0.05, 1);
  SweepConfig cfg;
  cfg.t_min = 2;
  cfg.t_max = 40;
  cfg.t_step = 2;
  cfg.runs = 3;
  cfg.base_seed = 1;
  cfg.model = ModelKind::LdaGibbs;
  auto lda = run_sweep(syn.corpus, cfg);
  cfg.model = ModelKind::Plsa;
  auto plsa = run_sweep(syn.corpus, cfg);
  return {std::move(lda), std::move(plsa), seconds_since(start)};
}

const AveragedPoint* averaged_at(const SweepReport& r, std::size_t t) {
  for (const auto& a : r.averaged)
    if (a.topics == t && a.point) return &a;
  return nullptr;
}

std::string curve(const SweepReport& r) {
  std::string s;
  for (const auto& a : r.averaged)
    s += a.point ? fmt::format(" {}:{:.3f}", a.topics, a.point->renyi) : fmt::format(" {}:-", a.topics);
  return s;
}

Outcome planted_recovery(const PlantedSweeps& s) {
  bool pass = s.seconds < 15 * 60;
  std::string detail;
  for (const auto* r : {&s.lda, &s.plsa}) {
    const auto name = to_string(r->config.model);
    if (!r->argmin_renyi) {
      pass = false;
      detail += fmt::format("{}: no argmin; ", name);
      continue;
    }
    const std::size_t tmin = *r->argmin_renyi;
    const auto* at_min = averaged_at(*r, tmin);
    const auto* at_max = averaged_at(*r, 40);
    const bool window = tmin >= 6 && tmin <= 14;
    const bool rises = at_min && at_max && at_max->point->renyi > at_min->point->renyi;
    pass = pass && window && rises;
    detail += fmt::format("{}: argmin T={} ({}), renyi(40) {} renyi(argmin); ", name, tmin,
                          window ? "in [6,14]" : "outside [6,14]", rises ? ">" : "not >");
  }
  detail += fmt::format("sweeps {:.0f} s", s.seconds);
  return {pass, detail};
}

Outcome shannon_artifact(const PlantedSweeps& s) {
  bool pass = true;
  std::string detail;
  for (const auto* r : {&s.lda, &s.plsa}) {
    const auto* a4 = averaged_at(*r, 4);
    const auto* a40 = averaged_at(*r, 40);
    const bool ok = a4 && a40 && a40->point->shannon < a4->point->shannon;
    pass = pass && ok;
    detail += fmt::format("{}: S(4)={:.4f} S(40)={:.4f}; ", to_string(r->config.model),
                          a4 ? a4->point->shannon : NAN, a40 ? a40->point->shannon : NAN);
  }
  return {pass, detail};
}

Outcome invariance_artifacts(const PlantedSweeps& s) {
  bool pass = true;
  std::string detail;
  for (const auto* r : {&s.lda, &s.plsa}) {
    bool shape = true;
    for (const auto& m : r->jaccard) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        shape = shape && m(i, i) == 1.0;
        for (std::size_t j = 0; j < m.size(); ++j) shape = shape && m(i, j) == m(j, i);
      }
    }
    const auto diag = diagonal_curve(r->jaccard.at(0));
    bool in_range = true;
    std::size_t pairs = 0, stable = 0;
    for (const auto& p : diag) {
      in_range = in_range && p.value && *p.value >= 0.0 && *p.value <= 1.0;
      const std::size_t next = p.topics + r->config.t_step;
      if (p.topics >= 10 && next <= 30) {
        ++pairs;
        if (p.value && *p.value > 0.5) ++stable;
      }
    }
    const bool enough = pairs > 0 && stable * 10 >= pairs * 8;
    pass = pass && shape && in_range && enough;
    detail += fmt::format("{}: symmetric/unit-diagonal {}, diagonal in [0,1] {}, {}/{} mid-range pairs > 0.5; ",
                          to_string(r->config.model), shape ? "yes" : "no", in_range ? "yes" : "no", stable, pairs);
  }
  return {pass, detail};
}

}  // namespace

int main() {
  check("algebraic entropy oracle", algebraic_oracle);
  check("exact worked case", worked_case);
  check("EM monotonicity", em_monotonicity);
  check("Gibbs micro-scale posterior", gibbs_micro);
  check("GLDA region 0 equals LDA", glda_degeneracy);

  PlantedSweeps sweeps;
  try {
    sweeps = planted_sweeps();
  } catch (const std::exception& e) {
    for (const char* name : {"planted-topic recovery", "Shannon monotone artifact", "T-invariance artifacts"})
      report(name, {false, std::string("sweep failed: ") + e.what()});
    return 1;
  }
  fmt::print("  lda-gs averaged renyi:{}\n", curve(sweeps.lda));
  fmt::print("  plsa averaged renyi:{}\n", curve(sweeps.plsa));
  check("planted-topic recovery", [&] { return planted_recovery(sweeps); });
  check("Shannon monotone artifact", [&] { return shannon_artifact(sweeps); });
  check("T-invariance artifacts", [&] { return invariance_artifacts(sweeps); });

  fmt::print("{} criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
