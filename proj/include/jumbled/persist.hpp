#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>

#include "jumbled/corner.hpp"

namespace jumbled {

// On-disk layout, all integers little-endian:
//   magic    8 bytes  "CORNRIDX"
//   version  u32      kIndexVersion
//   n, total_a, total_b, |l_min|, |l_max|, peak_min, peak_max   7 x u64
//   l_min pairs, then l_max pairs                               2 x u64 each
inline constexpr std::array<char, 8> kIndexMagic{'C', 'O', 'R', 'N',
                                                 'R', 'I', 'D', 'X'};
inline constexpr std::uint32_t kIndexVersion = 1;
inline constexpr std::size_t kIndexHeaderBytes = 8 + 4 + 7 * 8;
inline constexpr std::size_t kIndexPairBytes = 16;

constexpr std::size_t index_file_size(std::size_t lmin, std::size_t lmax) {
  return kIndexHeaderBytes + kIndexPairBytes * (lmin + lmax);
}

// Throws IoError if the sink fails.
void serialize(const CornerIndex& index, std::ostream& sink);

// Throws FormatError on bad magic/version and CorruptIndexError (naming the
// failed check) on truncation, trailing bytes or broken invariants.
CornerIndex deserialize(std::istream& source);

void save_index(const CornerIndex& index, const std::filesystem::path& path);
CornerIndex load_index(const std::filesystem::path& path);

}  // namespace jumbled
