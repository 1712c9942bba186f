#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "helpers.hpp"
#include "jumbled/errors.hpp"
#include "jumbled/generate.hpp"
#include "jumbled/oracle.hpp"
#include "jumbled/pnf.hpp"

using namespace jumbled;

namespace {

const std::string kPnfA = "aaabbaabbaabbaabbb";
const std::string kPnfB = "bbbaabbaaabbababaa";

// Definition-chasing PNF_c: prefix of length m holds the maximum number of
// c's over all length-m windows of s.
std::string pnf_by_definition(const std::string& s, char c) {
  const char other = c == 'a' ? 'b' : 'a';
  std::string out;
  std::size_t prev_best = 0;
  for (std::size_t m = 1; m <= s.size(); ++m) {
    std::size_t best = 0;
    for (std::size_t i = 0; i + m <= s.size(); ++i) {
      best = std::max<std::size_t>(best, std::count(s.begin() + i, s.begin() + i + m, c));
    }
    out.push_back(best > prev_best ? c : other);
    prev_best = best;
  }
  return out;
}

}  // namespace

TEST_CASE("rank and select") {
  CHECK(rank(kPnfA, Letter::a, 6) == 4);
  CHECK(rank(kPnfA, Letter::b, 0) == 0);
  CHECK(rank("aab", Letter::b, 3) == 1);
  CHECK_THROWS_AS(rank("aab", Letter::a, 4), OutOfRangeError);

  CHECK(select("aabab", Letter::a, 3) == 4);
  CHECK(select("abab", Letter::a, 1) == 1);
  CHECK(select(kPnfA, Letter::a, 3) == 3);
  CHECK_THROWS_AS(select("aabab", Letter::a, 4), OutOfRangeError);
  CHECK_THROWS_AS(select("aabab", Letter::a, 0), OutOfRangeError);

  const RankSelect rs(kPnfA, Letter::a);
  CHECK(rs.rank(6) == 4);
  CHECK(rs.select(3) == 3);
  CHECK_THROWS_AS(rs.select(10), OutOfRangeError);
}

TEST_CASE("rank/select duality") {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto s = random_text(rng() % 80, rng);
    for (Letter c : {Letter::a, Letter::b}) {
      const RankSelect rs(s, c);
      for (std::size_t i = 1; i <= rs.count(); ++i) {
        REQUIRE(rank(s, c, select(s, c, i)) == i);
        REQUIRE(rs.select(i) == select(s, c, i));
      }
      for (std::size_t i = 0; i <= s.size(); ++i) REQUIRE(rs.rank(i) == rank(s, c, i));
    }
  }
}

TEST_CASE("prefix normal forms of the worked example") {
  const auto idx = build_index(testing::kExample);
  const auto pnfs = pnf_from_index(idx);
  CHECK(pnfs.pnf_a == kPnfA);
  CHECK(pnfs.pnf_b == kPnfB);
  CHECK(verify_pnf_relations(idx, pnfs));
  CHECK(verify_pnf_relations(idx, {kPnfA, kPnfB}));
  CHECK_FALSE(verify_pnf_relations(idx, {kPnfB, kPnfA}));
  CHECK(2 * idx.l_min().size() == padded_length(encode(pnfs.pnf_a)));
}

TEST_CASE("degenerate prefix normal forms") {
  CHECK(pnf_from_index(build_index("aaa")) == PnfPair{"aaa", "aaa"});
  CHECK(pnf_from_index(build_index("bbb")) == PnfPair{"bbb", "bbb"});
  const auto empty = build_index("");
  CHECK(pnf_from_index(empty) == PnfPair{"", ""});
  CHECK(verify_pnf_relations(empty, pnf_from_index(empty)));
}

TEST_CASE("PNFs match the definition and satisfy the relations") {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto s = t == 0 ? random_text(64, rng) : random_text(rng() % 70, rng);
    const auto idx = build_index(s);
    const auto pnfs = pnf_from_index(idx);
    REQUIRE(pnfs.pnf_a == pnf_by_definition(s, 'a'));
    REQUIRE(pnfs.pnf_b == pnf_by_definition(s, 'b'));
    CHECK(verify_pnf_relations(idx, pnfs));
    CHECK(2 * idx.l_min().size() == padded_length(encode(pnfs.pnf_a)));

    // Self-normality and idempotence.
    CHECK(pnf_by_definition(pnfs.pnf_a, 'a') == pnfs.pnf_a);
    CHECK(pnf_from_index(build_index(pnfs.pnf_a)).pnf_a == pnfs.pnf_a);
  }
}

TEST_CASE("equal Parikh sets iff equal PNF pairs") {
  for (std::size_t n = 0; n <= 10; ++n) {
    std::map<std::vector<ParikhVector>, PnfPair> by_set;
    std::map<std::pair<std::string, std::string>, std::vector<ParikhVector>> by_pnf;
    for (const auto& s : testing::all_strings(n)) {
      const auto set = oracle::parikh_set_bruteforce(s).elements();
      const auto pnfs = pnf_from_index(build_index(s));
      REQUIRE(by_set.emplace(set, pnfs).first->second == pnfs);
      REQUIRE(by_pnf.emplace(std::pair{pnfs.pnf_a, pnfs.pnf_b}, set).first->second == set);
    }
  }
}
