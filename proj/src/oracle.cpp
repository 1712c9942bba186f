#include "jumbled/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "jumbled/errors.hpp"

namespace jumbled::oracle {

namespace {

void check_length(std::string_view s, std::size_t max_length) {
  if (s.size() > max_length) {
    throw OracleLimitError("oracle input length " + std::to_string(s.size()) +
                           " exceeds bound " + std::to_string(max_length));
  }
}

Count count_a(std::string_view s) {
  return static_cast<Count>(std::count(s.begin(), s.end(), 'a'));
}

}  // namespace

ParikhSet::ParikhSet(Count total_a, Count total_b)
    : total_a_(total_a),
      total_b_(total_b),
      cells_((total_a + 1) * (total_b + 1), false) {}

bool ParikhSet::contains(ParikhVector q) const {
  if (q.x > total_a_ || q.y > total_b_) return false;
  return cells_[q.x * (total_b_ + 1) + q.y];
}

void ParikhSet::insert(ParikhVector q) {
  auto cell = cells_[q.x * (total_b_ + 1) + q.y];
  if (!cell) {
    cell = true;
    ++size_;
  }
}

std::vector<ParikhVector> ParikhSet::elements() const {
  std::vector<ParikhVector> out;
  out.reserve(size_);
  for (Count x = 0; x <= total_a_; ++x) {
    for (Count y = 0; y <= total_b_; ++y) {
      if (contains({x, y})) out.push_back({x, y});
    }
  }
  return out;
}

ParikhSet parikh_set_bruteforce(std::string_view s, std::size_t max_length) {
  check_length(s, max_length);
  const Count a = count_a(s);
  ParikhSet set(a, s.size() - a);
  set.insert({0, 0});
  for (std::size_t i = 0; i < s.size(); ++i) {
    ParikhVector p;
    for (std::size_t j = i; j < s.size(); ++j) {
      (s[j] == 'a' ? p.x : p.y) += 1;
      set.insert(p);
    }
  }
  return set;
}

BminBmaxTable bmin_bmax_naive(std::string_view s, std::size_t max_length) {
  check_length(s, max_length);
  const Count a = count_a(s);
  BminBmaxTable t;
  t.bmin.assign(a + 1, std::numeric_limits<Count>::max());
  t.bmax.assign(a + 1, 0);
  t.bmin[0] = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ParikhVector p;
    for (std::size_t j = i; j < s.size(); ++j) {
      (s[j] == 'a' ? p.x : p.y) += 1;
      t.bmin[p.x] = std::min(t.bmin[p.x], p.y);
      t.bmax[p.x] = std::max(t.bmax[p.x], p.y);
    }
  }
  return t;
}

bool sliding_window_query(std::string_view s, ParikhVector q) {
  const Count m = q.x + q.y;
  if (m == 0) return true;
  if (m > s.size()) return false;
  Count in_window = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    in_window += s[j] == 'a';
    if (j >= m) in_window -= s[j - m] == 'a';
    if (j + 1 >= m && in_window == q.x) return true;
  }
  return false;
}

bool verify_interval_lemma(std::string_view s, std::size_t max_length) {
  const ParikhSet set = parikh_set_bruteforce(s, max_length);
  for (std::size_t m = 0; m <= s.size(); ++m) {
    bool seen = false;
    bool closed = false;
    for (Count x = 0; x <= m; ++x) {
      const bool hit = set.contains({x, m - x});
      if (hit && closed) return false;
      if (!hit && seen) closed = true;
      seen = seen || hit;
    }
    // Some length-m substring always exists.
    if (!seen) return false;
  }
  return true;
}

namespace {

// True iff every element of `set` is covered by a witness w with
// w.x >= x, w.y <= y (`a_side`) or w.x <= x, w.y >= y (otherwise).
bool covered(const ParikhSet& set, const std::vector<ParikhVector>& witnesses,
             bool a_side) {
  const Count a = set.total_a();
  if (a_side) {
    // best[x] = min y over witnesses with w.x >= x.
    std::vector<Count> best(a + 2, std::numeric_limits<Count>::max());
    for (const auto& w : witnesses) best[w.x] = std::min(best[w.x], w.y);
    for (Count x = a; x-- > 0;) best[x] = std::min(best[x], best[x + 1]);
    for (const auto& q : set.elements()) {
      if (best[q.x] > q.y) return false;
    }
  } else {
    // best[x] = max y over witnesses with w.x <= x.
    std::vector<Count> best(a + 1, 0);
    std::vector<bool> any(a + 1, false);
    for (const auto& w : witnesses) {
      best[w.x] = std::max(best[w.x], w.y);
      any[w.x] = true;
    }
    for (Count x = 1; x <= a; ++x) {
      best[x] = std::max(best[x], best[x - 1]);
      any[x] = any[x] || any[x - 1];
    }
    for (const auto& q : set.elements()) {
      if (!any[q.x] || best[q.x] < q.y) return false;
    }
  }
  return true;
}

bool starts_run(std::string_view s, std::size_t i) {
  return i == 0 || s[i - 1] != s[i];
}

bool ends_run(std::string_view s, std::size_t j) {
  return j + 1 == s.size() || s[j + 1] != s[j];
}

}  // namespace

bool lemma1_witness_check(std::string_view s, std::size_t max_length) {
  const ParikhSet set = parikh_set_bruteforce(s, max_length);
  std::vector<ParikhVector> full_a{{0, 0}};
  std::vector<ParikhVector> full_b{{0, 0}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    ParikhVector p;
    for (std::size_t j = i; j < s.size(); ++j) {
      (s[j] == 'a' ? p.x : p.y) += 1;
      if (!starts_run(s, i) || !ends_run(s, j) || s[i] != s[j]) continue;
      (s[i] == 'a' ? full_a : full_b).push_back(p);
    }
  }
  return covered(set, full_a, true) && covered(set, full_b, false);
}

}  // namespace jumbled::oracle
