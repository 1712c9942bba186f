#include "jumbled/batch.hpp"

#include <algorithm>
#include <cstdint>

#include <omp.h>

#include "jumbled/errors.hpp"

namespace jumbled {

namespace {

void check_spans(std::size_t queries, std::size_t out) {
  if (queries != out) throw OutOfRangeError("query/output span size mismatch");
}

int resolve_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

// Row x of the grid, y in [0, max(total_b of both)].
std::size_t row_mismatches(const CornerIndex& index,
                           const oracle::ParikhSet& truth, Count x,
                           Count y_end) {
  std::size_t bad = 0;
  for (Count y = 0; y <= y_end; ++y) {
    bad += query(index, {x, y}) != truth.contains({x, y});
  }
  return bad;
}

}  // namespace

void query_batch_serial(const CornerIndex& index,
                        std::span<const ParikhVector> queries,
                        std::span<std::uint8_t> out) {
  check_spans(queries.size(), out.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    out[i] = query(index, queries[i]);
  }
}

void query_batch(const CornerIndex& index,
                 std::span<const ParikhVector> queries,
                 std::span<std::uint8_t> out, int threads) {
  check_spans(queries.size(), out.size());
  const auto count = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    out[i] = query(index, queries[i]);
  }
}

std::size_t grid_mismatches_serial(const CornerIndex& index,
                                   const oracle::ParikhSet& truth) {
  const Count x_end = std::max(index.total_a(), truth.total_a());
  const Count y_end = std::max(index.total_b(), truth.total_b());
  std::size_t bad = 0;
  for (Count x = 0; x <= x_end; ++x) bad += row_mismatches(index, truth, x, y_end);
  return bad;
}

std::size_t grid_mismatches(const CornerIndex& index,
                            const oracle::ParikhSet& truth, int threads) {
  const auto x_end =
      static_cast<std::int64_t>(std::max(index.total_a(), truth.total_a()));
  const Count y_end = std::max(index.total_b(), truth.total_b());
  std::size_t bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad) \
    num_threads(resolve_threads(threads))
  for (std::int64_t x = 0; x <= x_end; ++x) {
    bad += row_mismatches(index, truth, static_cast<Count>(x), y_end);
  }
  return bad;
}

}  // namespace jumbled
