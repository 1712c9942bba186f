#include "doctest.h"

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "jumbled/errors.hpp"
#include "jumbled/generate.hpp"
#include "jumbled/rle.hpp"

using namespace jumbled;

TEST_CASE("encode worked example") {
  const auto rle = encode(testing::kExample);
  CHECK(rle.a_runs == std::vector<Count>{2, 1, 1, 3, 2});
  CHECK(rle.b_runs == std::vector<Count>{1, 1, 2, 2, 3});
  CHECK(rho(rle) == 10);
  CHECK(decode(rle) == testing::kExample);
}

TEST_CASE("encode padded endpoints") {
  CHECK(encode("").empty());
  CHECK(rho(encode("")) == 0);

  const auto bbb = encode("bbb");
  CHECK(bbb.a_runs == std::vector<Count>{0});
  CHECK(bbb.b_runs == std::vector<Count>{3});
  CHECK(rho(bbb) == 1);

  const auto aaa = encode("aaa");
  CHECK(aaa.a_runs == std::vector<Count>{3});
  CHECK(aaa.b_runs == std::vector<Count>{0});
  CHECK(decode(aaa) == "aaa");

  const auto ba = encode("ba");
  CHECK(ba.a_runs == std::vector<Count>{0, 1});
  CHECK(ba.b_runs == std::vector<Count>{1, 0});
  CHECK(rho(ba) == 2);
}

TEST_CASE("encode rejects foreign characters with their offset") {
  try {
    encode("abxb");
    FAIL("expected InputFormatError");
  } catch (const InputFormatError& e) {
    CHECK(e.offset == 2);
  }
  CHECK_THROWS_AS(encode("0101"), InputFormatError);
}

TEST_CASE("decode rejects interior zero runs") {
  CHECK_THROWS_AS(decode({{2, 0, 1}, {1, 1, 1}}), MalformedEncodingError);
  CHECK_THROWS_AS(decode({{2, 1}, {0, 1}}), MalformedEncodingError);
  CHECK_THROWS_AS(decode({{2}, {1, 1}}), MalformedEncodingError);
  CHECK_THROWS_AS(decode({{0}, {0}}), MalformedEncodingError);
  CHECK(decode({{}, {}}) == "");
}

TEST_CASE("normalize_text maps alphabets and skips whitespace") {
  CHECK(normalize_text("0110\n", Alphabet::zero_one) == "abba");
  CHECK(normalize_text("ab ba\r\n", Alphabet::ab) == "abba");
  try {
    normalize_text("ab\nac", Alphabet::ab);
    FAIL("expected InputFormatError");
  } catch (const InputFormatError& e) {
    CHECK(e.offset == 4);
  }
  CHECK_THROWS_AS(normalize_text("ab", Alphabet::zero_one), InputFormatError);
}

namespace {

std::size_t runs_by_scan(const std::string& s) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < s.size(); ++i) runs += i == 0 || s[i] != s[i - 1];
  return runs;
}

}  // namespace

TEST_CASE("round trip, maximality and rho on all short strings") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& s : testing::all_strings(n)) {
      const auto rle = encode(s);
      REQUIRE(decode(rle) == s);
      CHECK(rho(rle) == runs_by_scan(s));
      const std::size_t r = rle.pairs();
      if (r > 0) {
        CHECK(2 * r - 2 <= rho(rle));
        CHECK(rho(rle) <= 2 * r);
      }
      for (std::size_t i = 1; i < r; ++i) CHECK(rle.a_runs[i] > 0);
      for (std::size_t i = 0; i + 1 < r; ++i) CHECK(rle.b_runs[i] > 0);
    }
  }
}

TEST_CASE("round trip on random long strings") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto s = t % 2 ? random_text(2000, rng) : geometric_run_text(2000, 0.05, rng);
    const auto rle = encode(s);
    CHECK(decode(rle) == s);
    Count a = 0;
    for (Count u : rle.a_runs) a += u;
    CHECK(a == static_cast<Count>(std::count(s.begin(), s.end(), 'a')));
  }
}

TEST_CASE("text_with_runs produces exactly the requested run count") {
  Rng rng(3);
  for (std::size_t runs : {1u, 2u, 17u, 100u}) {
    const auto s = text_with_runs(100, runs, rng);
    CHECK(s.size() == 100);
    CHECK(runs_by_scan(s) == runs);
  }
  CHECK_THROWS_AS(text_with_runs(10, 11, rng), OutOfRangeError);
}
