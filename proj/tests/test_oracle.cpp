#include "doctest.h"

#include "helpers.hpp"
#include "jumbled/errors.hpp"
#include "jumbled/generate.hpp"
#include "jumbled/oracle.hpp"

using namespace jumbled;
using namespace jumbled::oracle;

TEST_CASE("parikh_set_bruteforce small strings") {
  using V = std::vector<ParikhVector>;
  CHECK(parikh_set_bruteforce("").elements() == V{{0, 0}});
  CHECK(parikh_set_bruteforce("ab").elements() == V{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(parikh_set_bruteforce("aab").elements() ==
        V{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CHECK(parikh_set_bruteforce("aab").size() == 6);
}

TEST_CASE("safety bound refuses long inputs") {
  const std::string s(33, 'a');
  CHECK_THROWS_AS(parikh_set_bruteforce(s, 32), OracleLimitError);
  CHECK_THROWS_AS(bmin_bmax_naive(s, 32), OracleLimitError);
  CHECK_NOTHROW(parikh_set_bruteforce(s, 33));
}

TEST_CASE("bmin_bmax_naive reproduces the worked table") {
  const auto t = bmin_bmax_naive(testing::kExample);
  CHECK(t.bmin == std::vector<Count>{0, 0, 0, 0, 2, 2, 4, 4, 6, 6});
  CHECK(t.bmax == std::vector<Count>{3, 3, 5, 5, 5, 7, 8, 9, 9, 9});

  const auto aaa = bmin_bmax_naive("aaa");
  CHECK(aaa.bmin == std::vector<Count>{0, 0, 0, 0});
  CHECK(aaa.bmax == std::vector<Count>{0, 0, 0, 0});

  const auto abba = bmin_bmax_naive("abba");
  CHECK(abba.bmin == std::vector<Count>{0, 0, 2});
  CHECK(abba.bmax == std::vector<Count>{2, 2, 2});
}

TEST_CASE("sliding_window_query") {
  CHECK(sliding_window_query(testing::kExample, {3, 3}));
  CHECK_FALSE(sliding_window_query(testing::kExample, {5, 1}));
  CHECK(sliding_window_query(testing::kExample, {0, 0}));
  CHECK(sliding_window_query("", {0, 0}));
  CHECK_FALSE(sliding_window_query("ab", {1, 2}));
  CHECK(sliding_window_query("ab", {1, 1}));
}

TEST_CASE("interval lemma and run witnesses") {
  CHECK(verify_interval_lemma(testing::kExample));
  CHECK(verify_interval_lemma(""));
  CHECK(lemma1_witness_check(testing::kExample));
  CHECK(lemma1_witness_check("a"));
  CHECK(lemma1_witness_check("bbb"));

  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto s = random_text(1 + rng() % 64, rng);
    CHECK(verify_interval_lemma(s));
  }
}

TEST_CASE("oracle routes agree with each other") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto s = t % 2 ? random_text(rng() % 40, rng)
                         : geometric_run_text(rng() % 40, 0.3, rng);
    const auto set = parikh_set_bruteforce(s);
    const auto table = bmin_bmax_naive(s);
    for (Count x = 0; x <= set.total_a() + 1; ++x) {
      for (Count y = 0; y <= set.total_b() + 1; ++y) {
        const bool in_set = set.contains({x, y});
        const bool in_table = x < table.bmin.size() && table.bmin[x] <= y &&
                              y <= table.bmax[x];
        REQUIRE(in_set == sliding_window_query(s, {x, y}));
        REQUIRE(in_set == in_table);
      }
    }
    // Table invariants.
    CHECK(table.bmin[0] == 0);
    CHECK(table.bmax.back() == set.total_b());
    for (std::size_t i = 0; i < table.bmin.size(); ++i) {
      CHECK(table.bmin[i] <= table.bmax[i]);
      if (i > 0) {
        CHECK(table.bmin[i - 1] <= table.bmin[i]);
        CHECK(table.bmax[i - 1] <= table.bmax[i]);
      }
    }
  }
}
