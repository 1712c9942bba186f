#include "jumbled/pnf.hpp"

#include <algorithm>

#include "jumbled/errors.hpp"

namespace jumbled {

std::size_t rank(std::string_view s, Letter c, std::size_t i) {
  if (i > s.size()) {
    throw OutOfRangeError("rank position " + std::to_string(i) +
                          " exceeds length " + std::to_string(s.size()));
  }
  return static_cast<std::size_t>(
      std::count(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i),
                 static_cast<char>(c)));
}

std::size_t select(std::string_view s, Letter c, std::size_t i) {
  if (i >= 1) {
    std::size_t seen = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == static_cast<char>(c) && ++seen == i) return k + 1;
    }
  }
  throw OutOfRangeError("select index " + std::to_string(i) +
                        " out of range");
}

RankSelect::RankSelect(std::string_view s, Letter c) : prefix_(s.size() + 1, 0) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    const bool hit = s[k] == static_cast<char>(c);
    prefix_[k + 1] = prefix_[k] + hit;
    if (hit) positions_.push_back(k + 1);
  }
}

std::size_t RankSelect::rank(std::size_t i) const {
  if (i > size()) throw OutOfRangeError("rank position out of range");
  return prefix_[i];
}

std::size_t RankSelect::select(std::size_t i) const {
  if (i == 0 || i > count()) throw OutOfRangeError("select index out of range");
  return positions_[i - 1];
}

PnfPair pnf_from_index(const CornerIndex& index) {
  PnfPair out;
  out.pnf_a.reserve(index.n());
  out.pnf_b.reserve(index.n());

  // l_min = (p_1,q_0), ..., (p_r',q_{r'-1}) with q_{r'} = |s|_b.
  const CornerList& lmin = index.l_min();
  Count p_prev = 0;
  for (std::size_t m = 0; m < lmin.size(); ++m) {
    const Count q_next = m + 1 < lmin.size() ? lmin[m + 1].y : index.total_b();
    out.pnf_a.append(lmin[m].x - p_prev, 'a');
    out.pnf_a.append(q_next - lmin[m].y, 'b');
    p_prev = lmin[m].x;
  }

  // pnf_b opens with the longest b-run, then each bmax step is a-block
  // followed by b-block; trailing a's close it.
  const CornerList& lmax = index.l_max();
  out.pnf_b.append(lmax.front().y, 'b');
  for (std::size_t m = 1; m < lmax.size(); ++m) {
    out.pnf_b.append(lmax[m].x - lmax[m - 1].x, 'a');
    out.pnf_b.append(lmax[m].y - lmax[m - 1].y, 'b');
  }
  out.pnf_b.append(index.total_a() - lmax.back().x, 'a');
  return out;
}

bool verify_pnf_relations(const CornerIndex& index, const PnfPair& pnfs) {
  const Count n = index.n();
  const Count a = index.total_a();
  if (pnfs.pnf_a.size() != n || pnfs.pnf_b.size() != n) return false;

  const RankSelect pa(pnfs.pnf_a, Letter::a);
  const RankSelect pb(pnfs.pnf_b, Letter::a);
  if (pa.count() != a || pb.count() != a) return false;

  const LengthTables lengths = f_F_tables(index);
  for (Count i = 0; i <= n; ++i) {
    if (lengths.F[i] != pa.rank(i)) return false;
  }
  for (Count i = 1; i <= a; ++i) {
    if (bmin_lookup(index, i) != pa.select(i) - i) return false;
  }
  for (Count i = 0; i < a; ++i) {
    if (bmax_lookup(index, i) != pb.select(i + 1) - (i + 1)) return false;
  }
  return bmax_lookup(index, a) == index.total_b();
}

}  // namespace jumbled
