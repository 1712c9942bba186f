#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace jumbled {

using Count = std::uint64_t;

// Number of a's and b's in a string.
struct ParikhVector {
  Count x = 0;
  Count y = 0;

  friend constexpr auto operator<=>(const ParikhVector&,
                                    const ParikhVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ParikhVector& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

// Dense bmin/bmax tables indexed by the number of a's, 0..|s|_a.
struct BminBmaxTable {
  std::vector<Count> bmin;
  std::vector<Count> bmax;

  friend bool operator==(const BminBmaxTable&, const BminBmaxTable&) = default;
};

}  // namespace jumbled
