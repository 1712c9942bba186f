#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "jumbled/corner.hpp"
#include "jumbled/oracle.hpp"

// Data-parallel kernels over an immutable index. Each OpenMP kernel has a
// serial twin with identical results; tests compare the two and the bench
// target times them against each other.
namespace jumbled {

// out[i] = query(index, queries[i]). Spans must have equal length.
void query_batch_serial(const CornerIndex& index,
                        std::span<const ParikhVector> queries,
                        std::span<std::uint8_t> out);

// threads <= 0 uses the OpenMP default.
void query_batch(const CornerIndex& index,
                 std::span<const ParikhVector> queries,
                 std::span<std::uint8_t> out, int threads = 0);

// Number of cells of [0, total_a] x [0, total_b] where the index and the
// brute-force set disagree. Grid shapes must match or every cell of the
// larger one counts.
std::size_t grid_mismatches_serial(const CornerIndex& index,
                                   const oracle::ParikhSet& truth);
std::size_t grid_mismatches(const CornerIndex& index,
                            const oracle::ParikhSet& truth, int threads = 0);

}  // namespace jumbled
