#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "topicent/error.hpp"
#include "topicent/invariance.hpp"

using namespace topicent;

namespace {

TopWordSet make(std::size_t t, std::vector<WordId> ids) { return TopWordSet::from_ids(t, std::move(ids)); }

std::vector<TopWordSet> random_sets(std::size_t count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<WordId> word(0, 30);
  std::uniform_int_distribution<int> size(0, 20);
  std::vector<TopWordSet> sets;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<WordId> ids(size(gen));
    for (auto& w : ids) w = word(gen);
    sets.push_back(make(2 * (i + 1), ids));
  }
  return sets;
}

}  // namespace

TEST_CASE("top words use the strict 1/N threshold over any topic") {
  PhiMatrix phi(4, 2);
  phi(0, 0) = phi(1, 0) = 0.5;
  phi(2, 1) = phi(3, 1) = 0.5;
  CHECK(top_words(phi).words == std::vector<WordId>{0, 1, 2, 3});
  CHECK(top_words(PhiMatrix(4, 3, 0.25)).words.empty());

  const auto rnd = oracle::random_phi(60, 7, 5);
  std::set<WordId> naive;
  for (std::size_t w = 0; w < 60; ++w)
    for (std::size_t t = 0; t < 7; ++t)
      if (rnd(w, t) > 1.0 / 60.0) naive.insert(static_cast<WordId>(w));
  CHECK(top_words(rnd).words == std::vector<WordId>(naive.begin(), naive.end()));
  CHECK(top_words(rnd).topics == 7);
}

TEST_CASE("ranked top words order by the best topic probability") {
  PhiMatrix phi(4, 2);
  phi(0, 0) = 0.3;
  phi(1, 0) = 0.7;
  phi(2, 1) = 0.6;
  phi(3, 1) = 0.4;
  CHECK(ranked_top_words(phi) == std::vector<WordId>{1, 2, 3, 0});
}

TEST_CASE("Jaccard index") {
  CHECK(jaccard(make(2, {1, 2, 3}), make(4, {1, 2, 3})) == 1.0);
  CHECK(jaccard(make(2, {1, 2}), make(4, {3, 4})) == 0.0);
  CHECK(jaccard(make(2, {1, 2, 3}), make(4, {2, 3, 4})) == 0.5);
  CHECK_FALSE(jaccard(make(2, {}), make(4, {})).has_value());
  CHECK(jaccard(make(2, {}), make(4, {5})) == 0.0);
}

TEST_CASE("Jaccard properties on random sets") {
  std::mt19937 gen(9);
  const auto sets = random_sets(40, 3);
  for (const auto& a : sets)
    for (const auto& b : sets) {
      const auto j = jaccard(a, b);
      if (!j) continue;
      CHECK(*j >= 0.0);
      CHECK(*j <= 1.0);
      CHECK(jaccard(b, a) == j);
      // Adding a word to both sets never lowers the index.
      const WordId extra = std::uniform_int_distribution<WordId>(0, 40)(gen);
      auto a2 = a.words, b2 = b.words;
      a2.push_back(extra);
      b2.push_back(extra);
      CHECK(*jaccard(make(0, a2), make(0, b2)) >= *j);
    }
}

TEST_CASE("Jaccard matrix") {
  SUBCASE("identical solutions") {
    const std::vector<TopWordSet> s{make(2, {1, 5}), make(4, {1, 5})};
    const auto m = jaccard_matrix(s);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(m(i, j) == 1.0);
  }
  SUBCASE("small worked case") {
    const std::vector<TopWordSet> s{make(2, {1}), make(4, {2}), make(6, {1})};
    const auto m = jaccard_matrix(s);
    CHECK(m.t_values() == std::vector<std::size_t>{2, 4, 6});
    for (std::size_t i = 0; i < 3; ++i) CHECK(m(i, i) == 1.0);
    CHECK(m(0, 2) == 1.0);
    CHECK(m(0, 1) == 0.0);
  }
  SUBCASE("mirrored half equals the full brute-force matrix") {
    const auto sets = random_sets(10, 8);
    const auto m = jaccard_matrix(sets);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j) {
        const std::set<unsigned> a(sets[i].words.begin(), sets[i].words.end());
        const std::set<unsigned> b(sets[j].words.begin(), sets[j].words.end());
        CHECK(m(i, j) == oracle::jaccard_sets(a, b));
        CHECK(m(i, j) == m(j, i));
      }
  }
  SUBCASE("empty solutions give missing cells") {
    const std::vector<TopWordSet> s{make(2, {}), make(4, {})};
    CHECK_FALSE(jaccard_matrix(s)(0, 1).has_value());
  }
  SUBCASE("fewer than two solutions") {
    const std::vector<TopWordSet> s{make(2, {1})};
    CHECK_THROWS_AS(jaccard_matrix(s), InvalidArgument);
    CHECK(jaccard_matrix_any(s)(0, 0) == 1.0);
  }
}

TEST_CASE("diagonal curve") {
  const std::vector<TopWordSet> same{make(2, {1, 2}), make(4, {1, 2}), make(6, {1, 2})};
  const auto curve = diagonal_curve(jaccard_matrix(same));
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].topics == 2);
  CHECK(curve[1].topics == 4);
  for (const auto& p : curve) CHECK(p.value == 1.0);

  const std::vector<TopWordSet> pair{make(2, {1, 2, 3}), make(4, {2, 3, 4})};
  const auto one = diagonal_curve(jaccard_matrix(pair));
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == 0.5);

  CHECK_THROWS_AS(diagonal_curve(jaccard_matrix_any(std::vector<TopWordSet>{make(2, {1})})), InvalidArgument);
}

TEST_CASE("CSV formats") {
  const std::vector<TopWordSet> s{make(2, {1, 2, 3}), make(4, {2, 3, 4}), make(6, {})};
  const auto m = jaccard_matrix(s);
  std::ostringstream out;
  write_csv(out, m);
  CHECK(out.str() ==
        "T,2,4,6\n"
        "2,1.000000,0.500000,0.000000\n"
        "4,0.500000,1.000000,0.000000\n"
        "6,0.000000,0.000000,\n");
  std::ostringstream dout;
  write_csv(dout, diagonal_curve(m));
  CHECK(dout.str() == "T,value\n2,0.500000\n4,0.000000\n");
}
