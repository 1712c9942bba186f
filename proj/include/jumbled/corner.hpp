#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <string_view>
#include <vector>

#include "jumbled/parikh.hpp"
#include "jumbled/rle.hpp"

namespace jumbled {

// p dominates q for the bmin side: at least as many a's, at most as many b's.
constexpr bool dominates_min(ParikhVector p, ParikhVector q) {
  return p != q && p.x >= q.x && p.y <= q.y;
}

// Mirror order whose maximal elements are the bmax corners.
constexpr bool dominates_max(ParikhVector p, ParikhVector q) {
  return p != q && p.x <= q.x && p.y >= q.y;
}

// Sorted by x; strictly increasing in both coordinates.
using CornerList = std::vector<ParikhVector>;

bool is_strict_chain(const CornerList& list);

enum class Side { min, max };

// Antichain of maximal elements under dominates_min (Side::min) or
// dominates_max (Side::max), keyed by x. A candidate is rejected iff its
// nearest neighbour (successor for min, predecessor for max) dominates it;
// once inserted, the elements it dominates are adjacent to it and are
// swept in one direction.
template <Side S>
class Frontier {
 public:
  // Returns true if `p` was inserted. Removed elements are appended to
  // `removed` when given.
  bool offer(ParikhVector p, std::vector<ParikhVector>* removed = nullptr) {
    if constexpr (S == Side::min) {
      auto it = points_.lower_bound(p.x);
      if (it != points_.end() && it->second <= p.y) return false;
      if (it != points_.end() && it->first == p.x && removed) {
        removed->push_back({it->first, it->second});
      }
      it = points_.insert_or_assign(it, p.x, p.y);
      while (it != points_.begin()) {
        auto prev = std::prev(it);
        if (prev->second < p.y) break;
        if (removed) removed->push_back({prev->first, prev->second});
        points_.erase(prev);
      }
    } else {
      auto it = points_.upper_bound(p.x);
      if (it != points_.begin()) {
        const auto prev = std::prev(it);
        if (prev->second >= p.y) return false;
        if (prev->first == p.x && removed) {
          removed->push_back({prev->first, prev->second});
        }
      }
      it = points_.insert_or_assign(it, p.x, p.y);
      for (auto next = std::next(it);
           next != points_.end() && next->second <= p.y;) {
        if (removed) removed->push_back({next->first, next->second});
        next = points_.erase(next);
      }
    }
    if (points_.size() > peak_) peak_ = points_.size();
    return true;
  }

  std::size_t size() const { return points_.size(); }
  std::size_t peak() const { return peak_; }

  CornerList freeze() const {
    CornerList out;
    out.reserve(points_.size());
    for (const auto& [x, y] : points_) out.push_back({x, y});
    return out;
  }

 private:
  std::map<Count, Count> points_;
  std::size_t peak_ = 0;
};

// Visits, for k = 1..r and i = 1..r-k+1 in that order, the Parikh vector of
// the span of k consecutive a-runs starting at a-run i (b-runs strictly
// inside the span only). fn(k, i, ParikhVector); k and i are 1-based.
template <class Fn>
void for_each_min_candidate(const RunLengthEncoding& rle, Fn&& fn) {
  const std::size_t r = rle.pairs();
  std::vector<Count> a_prefix(r + 1, 0), b_prefix(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    a_prefix[i + 1] = a_prefix[i] + rle.a_runs[i];
    b_prefix[i + 1] = b_prefix[i] + rle.b_runs[i];
  }
  for (std::size_t k = 1; k <= r; ++k) {
    for (std::size_t i = 1; i + k - 1 <= r; ++i) {
      const Count x = a_prefix[i + k - 1] - a_prefix[i - 1];
      const Count y = b_prefix[i + k - 2] - b_prefix[i - 1];
      fn(k, i, ParikhVector{x, y});
    }
  }
}

// Dual enumeration over spans of k consecutive b-runs starting at b-run j:
// y sums the spanned b-runs, x the a-runs strictly between them.
template <class Fn>
void for_each_max_candidate(const RunLengthEncoding& rle, Fn&& fn) {
  const std::size_t r = rle.pairs();
  std::vector<Count> a_prefix(r + 1, 0), b_prefix(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    a_prefix[i + 1] = a_prefix[i] + rle.a_runs[i];
    b_prefix[i + 1] = b_prefix[i] + rle.b_runs[i];
  }
  for (std::size_t k = 1; k <= r; ++k) {
    for (std::size_t j = 1; j + k - 1 <= r; ++j) {
      const Count y = b_prefix[j + k - 1] - b_prefix[j - 1];
      const Count x = a_prefix[j + k - 1] - a_prefix[j];
      fn(k, j, ParikhVector{x, y});
    }
  }
}

// Optional record of one list's construction.
struct ConstructionTrace {
  struct Candidate {
    std::size_t k;
    std::size_t start;
    ParikhVector value;
    bool skipped;  // padded zero run; never offered
    bool inserted;
  };
  std::vector<Candidate> candidates;
  std::vector<ParikhVector> removed;  // in order of removal
};

struct ListStats {
  std::size_t candidates = 0;  // always r(r+1)/2
  std::size_t peak = 0;        // largest size reached during construction
};

CornerList build_lmin(const RunLengthEncoding& rle, ListStats* stats = nullptr,
                      ConstructionTrace* trace = nullptr);
CornerList build_lmax(const RunLengthEncoding& rle, ListStats* stats = nullptr,
                      ConstructionTrace* trace = nullptr);

// Immutable corner index of a binary string. Safe for concurrent readers.
class CornerIndex {
 public:
  struct Stats {
    ListStats min;
    ListStats max;
  };

  CornerIndex();  // index of the empty string

  // Assembles an index from stored parts after checking every structural
  // invariant; throws CorruptIndexError naming the first failed check.
  static CornerIndex from_parts(CornerList l_min, CornerList l_max, Count n,
                                Count total_a, Count total_b,
                                Stats stats = {});

  const CornerList& l_min() const { return l_min_; }
  const CornerList& l_max() const { return l_max_; }
  Count n() const { return n_; }
  Count total_a() const { return total_a_; }
  Count total_b() const { return total_b_; }
  const Stats& stats() const { return stats_; }

  // Equality ignores the construction statistics.
  friend bool operator==(const CornerIndex& lhs, const CornerIndex& rhs) {
    return lhs.n_ == rhs.n_ && lhs.total_a_ == rhs.total_a_ &&
           lhs.total_b_ == rhs.total_b_ && lhs.l_min_ == rhs.l_min_ &&
           lhs.l_max_ == rhs.l_max_;
  }

 private:
  friend CornerIndex build_index(const RunLengthEncoding& rle);

  CornerList l_min_;
  CornerList l_max_;
  Count n_ = 0;
  Count total_a_ = 0;
  Count total_b_ = 0;
  Stats stats_;
};

CornerIndex build_index(const RunLengthEncoding& rle);
CornerIndex build_index(std::string_view s);

// Minimum / maximum number of b's over substrings with exactly x a's.
// Throw OutOfRangeError when x > total_a.
Count bmin_lookup(const CornerIndex& index, Count x);
Count bmax_lookup(const CornerIndex& index, Count x);

// True iff some substring has Parikh vector q.
bool query(const CornerIndex& index, ParikhVector q);

// f(m) / F(m): min / max number of a's over substrings of length m, m=0..n.
struct LengthTables {
  std::vector<Count> f;
  std::vector<Count> F;
};

BminBmaxTable dense_tables(const CornerIndex& index);
LengthTables f_F_tables(const CornerIndex& index);

}  // namespace jumbled
