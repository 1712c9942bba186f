#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "jumbled/parikh.hpp"

// Brute-force references. Nothing here touches the run-length encoding or
// the corner lists, so agreement with them is independent evidence.
namespace jumbled::oracle {

inline constexpr std::size_t kDefaultMaxLength = 4096;

// Exact Parikh set of a binary string stored as a dense
// (|s|_a + 1) x (|s|_b + 1) membership grid.
class ParikhSet {
 public:
  ParikhSet(Count total_a, Count total_b);

  Count total_a() const { return total_a_; }
  Count total_b() const { return total_b_; }
  bool contains(ParikhVector q) const;
  void insert(ParikhVector q);
  std::size_t size() const { return size_; }
  // Ascending by (x, y).
  std::vector<ParikhVector> elements() const;

  friend bool operator==(const ParikhSet&, const ParikhSet&) = default;

 private:
  Count total_a_;
  Count total_b_;
  std::vector<bool> cells_;
  std::size_t size_ = 0;
};

// O(n^2) enumeration of every substring. Throws OracleLimitError when
// |s| > max_length.
ParikhSet parikh_set_bruteforce(std::string_view s,
                                std::size_t max_length = kDefaultMaxLength);

BminBmaxTable bmin_bmax_naive(std::string_view s,
                              std::size_t max_length = kDefaultMaxLength);

// Single-query O(n) window scan with O(1) extra space.
bool sliding_window_query(std::string_view s, ParikhVector q);

// For every length m, the achievable a-counts form one contiguous interval.
bool verify_interval_lemma(std::string_view s,
                           std::size_t max_length = kDefaultMaxLength);

// Every vector of the Parikh set is dominated (or matched) by a substring
// that begins and ends with full a-runs, and dually by one that begins and
// ends with full b-runs. The empty substring counts as such a witness.
bool lemma1_witness_check(std::string_view s,
                          std::size_t max_length = kDefaultMaxLength);

}  // namespace jumbled::oracle
