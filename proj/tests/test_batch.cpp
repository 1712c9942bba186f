#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "jumbled/batch.hpp"
#include "jumbled/errors.hpp"
#include "jumbled/generate.hpp"

using namespace jumbled;

TEST_CASE("parallel query batch matches the serial reference") {
  Rng rng(61);
  const auto s = geometric_run_text(5000, 0.05, rng);
  const auto idx = build_index(s);
  std::vector<ParikhVector> queries(20000);
  for (auto& q : queries) q = {rng() % (idx.total_a() + 3), rng() % (idx.total_b() + 3)};

  std::vector<std::uint8_t> serial(queries.size()), parallel(queries.size());
  query_batch_serial(idx, queries, serial);
  for (int threads : {0, 1, 3}) {
    query_batch(idx, queries, parallel, threads);
    CHECK(parallel == serial);
  }
  for (std::size_t i = 0; i < 200; ++i) {
    CHECK(static_cast<bool>(serial[i]) == oracle::sliding_window_query(s, queries[i]));
  }

  std::vector<std::uint8_t> short_out(3);
  CHECK_THROWS_AS(query_batch(idx, queries, short_out), OutOfRangeError);
}

TEST_CASE("grid mismatch kernels") {
  Rng rng(67);
  for (int t = 0; t < 20; ++t) {
    const auto s = random_text(rng() % 300, rng);
    const auto idx = build_index(s);
    const auto truth = oracle::parikh_set_bruteforce(s);
    CHECK(grid_mismatches_serial(idx, truth) == 0);
    CHECK(grid_mismatches(idx, truth, 2) == 0);
  }
  // Index of a different string disagrees somewhere.
  const auto idx = build_index(testing::kExample);
  const auto other = oracle::parikh_set_bruteforce("abababababbbbaaaaa");
  const auto serial = grid_mismatches_serial(idx, other);
  CHECK(serial > 0);
  CHECK(grid_mismatches(idx, other) == serial);
}
