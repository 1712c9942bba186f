#include "jumbled/corner.hpp"

#include <algorithm>

#include "jumbled/errors.hpp"

namespace jumbled {

bool is_strict_chain(const CornerList& list) {
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (list[i - 1].x >= list[i].x || list[i - 1].y >= list[i].y) return false;
  }
  return true;
}

namespace {

template <Side S, class ForEach>
CornerList build_side(const RunLengthEncoding& rle, ListStats* stats,
                      ConstructionTrace* trace, ForEach for_each) {
  Frontier<S> frontier;
  std::size_t inspected = 0;
  for_each(rle, [&](std::size_t k, std::size_t start, ParikhVector p) {
    ++inspected;
    // A span whose counted letter sums to zero can only come from a padded
    // endpoint run.
    const bool skipped = (S == Side::min ? p.x : p.y) == 0;
    bool inserted = false;
    if (!skipped) {
      inserted = frontier.offer(p, trace ? &trace->removed : nullptr);
    }
    if (trace) trace->candidates.push_back({k, start, p, skipped, inserted});
  });

  CornerList list = frontier.freeze();
  if (list.empty()) list.push_back({0, 0});
  if (stats) {
    stats->candidates = inspected;
    stats->peak = std::max(frontier.peak(), list.size());
  }
  return list;
}

}  // namespace

CornerList build_lmin(const RunLengthEncoding& rle, ListStats* stats,
                      ConstructionTrace* trace) {
  validate(rle);
  return build_side<Side::min>(rle, stats, trace, [](const auto& e, auto&& fn) {
    for_each_min_candidate(e, fn);
  });
}

CornerList build_lmax(const RunLengthEncoding& rle, ListStats* stats,
                      ConstructionTrace* trace) {
  validate(rle);
  return build_side<Side::max>(rle, stats, trace, [](const auto& e, auto&& fn) {
    for_each_max_candidate(e, fn);
  });
}

CornerIndex::CornerIndex()
    : l_min_{{0, 0}}, l_max_{{0, 0}}, stats_{{0, 1}, {0, 1}} {}

CornerIndex CornerIndex::from_parts(CornerList l_min, CornerList l_max,
                                    Count n, Count total_a, Count total_b,
                                    Stats stats) {
  auto require = [](bool ok, const char* check) {
    if (!ok) throw CorruptIndexError(check);
  };
  require(total_a <= n && n - total_a == total_b, "n == total_a + total_b");
  require(!l_min.empty(), "l_min non-empty");
  require(!l_max.empty(), "l_max non-empty");
  require(is_strict_chain(l_min), "l_min strictly ascending");
  require(is_strict_chain(l_max), "l_max strictly ascending");
  require(l_min.back().x == total_a, "l_min ends at x == total_a");
  require(l_min.front().y == 0, "l_min starts with y == 0");
  require(total_a == 0 || l_min.front().x > 0,
          "l_min has no x == 0 entry when a's occur");
  require(l_min.back().y <= total_b, "l_min y within total_b");
  require(l_max.front().x == 0, "l_max starts at x == 0");
  require(l_max.back().y == total_b, "l_max ends at y == total_b");
  require(l_max.back().x <= total_a, "l_max x within total_a");
  require(total_b == 0 || l_max.front().y > 0,
          "l_max has no y == 0 entry when b's occur");

  CornerIndex index;
  index.l_min_ = std::move(l_min);
  index.l_max_ = std::move(l_max);
  index.n_ = n;
  index.total_a_ = total_a;
  index.total_b_ = total_b;
  index.stats_ = stats;
  for (const ParikhVector& p : index.l_min_) {
    require(bmax_lookup(index, p.x) >= p.y, "bmin <= bmax at every corner");
  }
  return index;
}

CornerIndex build_index(const RunLengthEncoding& rle) {
  CornerIndex index;
  index.l_min_ = build_lmin(rle, &index.stats_.min);
  index.l_max_ = build_lmax(rle, &index.stats_.max);
  index.total_a_ = 0;
  index.total_b_ = 0;
  for (Count u : rle.a_runs) index.total_a_ += u;
  for (Count v : rle.b_runs) index.total_b_ += v;
  index.n_ = index.total_a_ + index.total_b_;
  return index;
}

CornerIndex build_index(std::string_view s) { return build_index(encode(s)); }

namespace {

void check_range(const CornerIndex& index, Count x) {
  if (x > index.total_a()) {
    throw OutOfRangeError("x = " + std::to_string(x) + " exceeds total_a = " +
                          std::to_string(index.total_a()));
  }
}

bool by_x(const ParikhVector& p, Count x) { return p.x < x; }

}  // namespace

Count bmin_lookup(const CornerIndex& index, Count x) {
  check_range(index, x);
  const CornerList& l = index.l_min();
  return std::lower_bound(l.begin(), l.end(), x, by_x)->y;
}

Count bmax_lookup(const CornerIndex& index, Count x) {
  check_range(index, x);
  const CornerList& l = index.l_max();
  auto it = std::upper_bound(l.begin(), l.end(), x,
                             [](Count v, const ParikhVector& p) { return v < p.x; });
  return std::prev(it)->y;
}

bool query(const CornerIndex& index, ParikhVector q) {
  if (q.x > index.total_a() || q.y > index.total_b()) return false;
  return bmin_lookup(index, q.x) <= q.y && q.y <= bmax_lookup(index, q.x);
}

BminBmaxTable dense_tables(const CornerIndex& index) {
  const Count a = index.total_a();
  BminBmaxTable t;
  t.bmin.resize(a + 1);
  t.bmax.resize(a + 1);

  // bmin is constant on (previous corner, corner].
  std::size_t c = 0;
  for (Count x = 0; x <= a; ++x) {
    while (index.l_min()[c].x < x) ++c;
    t.bmin[x] = index.l_min()[c].y;
  }
  // bmax is constant on [corner, next corner).
  c = 0;
  for (Count x = 0; x <= a; ++x) {
    while (c + 1 < index.l_max().size() && index.l_max()[c + 1].x <= x) ++c;
    t.bmax[x] = index.l_max()[c].y;
  }
  return t;
}

LengthTables f_F_tables(const CornerIndex& index) {
  const Count n = index.n();
  const Count a = index.total_a();
  const BminBmaxTable t = dense_tables(index);

  // x + bmin(x) is strictly increasing: F(m) is the largest x whose
  // shortest substring with x a's fits in length m. Dually, f(m) is the
  // smallest x whose longest substring with x a's reaches length m.
  LengthTables out;
  out.f.resize(n + 1);
  out.F.resize(n + 1);
  Count hi = 0;
  Count lo = 0;
  for (Count m = 0; m <= n; ++m) {
    while (hi < a && hi + 1 + t.bmin[hi + 1] <= m) ++hi;
    while (lo + t.bmax[lo] < m) ++lo;
    out.F[m] = hi;
    out.f[m] = lo;
  }
  return out;
}

}  // namespace jumbled
