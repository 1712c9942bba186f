#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jumbled/corner.hpp"

namespace jumbled {

enum class Letter : char { a = 'a', b = 'b' };

// Number of `c` in s[0..i). Throws OutOfRangeError if i > |s|.
std::size_t rank(std::string_view s, Letter c, std::size_t i);

// 1-based position of the i-th `c`. Throws OutOfRangeError unless
// 1 <= i <= |s|_c.
std::size_t select(std::string_view s, Letter c, std::size_t i);

// Prefix-count table answering rank and select in O(1) after O(n) setup.
class RankSelect {
 public:
  RankSelect(std::string_view s, Letter c);

  std::size_t size() const { return prefix_.size() - 1; }
  std::size_t count() const { return positions_.size(); }
  std::size_t rank(std::size_t i) const;
  std::size_t select(std::size_t i) const;

 private:
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> positions_;
};

struct PnfPair {
  std::string pnf_a;
  std::string pnf_b;

  friend bool operator==(const PnfPair&, const PnfPair&) = default;
};

// Reads rle(PNF_a) off l_min and rle(PNF_b) off l_max.
PnfPair pnf_from_index(const CornerIndex& index);

// Checks F(i) = rank_a(pnf_a, i), bmin(i) = select_a(pnf_a, i) - i and
// bmax(i) = select_a(pnf_b, i+1) - (i+1) (bmax(|s|_a) = |s|_b) against the
// index for every valid i.
bool verify_pnf_relations(const CornerIndex& index, const PnfPair& pnfs);

}  // namespace jumbled
