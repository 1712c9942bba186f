#include "jumbled/persist.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <string>

#include "jumbled/errors.hpp"

namespace jumbled {

namespace {

template <class T>
void put_le(std::ostream& out, T value) {
  char bytes[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  }
  out.write(bytes, sizeof(T));
}

template <class T>
T get_le(std::istream& in, const char* field) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw CorruptIndexError(std::string("truncated at ") + field);
  }
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return value;
}

CornerList read_pairs(std::istream& in, std::uint64_t count,
                      const char* field) {
  CornerList list;
  // The count comes from an untrusted header; grow as pairs arrive.
  list.reserve(std::min<std::uint64_t>(count, 1u << 16));
  for (std::uint64_t i = 0; i < count; ++i) {
    const Count x = get_le<std::uint64_t>(in, field);
    const Count y = get_le<std::uint64_t>(in, field);
    list.push_back({x, y});
  }
  return list;
}

}  // namespace

void serialize(const CornerIndex& index, std::ostream& sink) {
  sink.write(kIndexMagic.data(), kIndexMagic.size());
  put_le<std::uint32_t>(sink, kIndexVersion);
  put_le<std::uint64_t>(sink, index.n());
  put_le<std::uint64_t>(sink, index.total_a());
  put_le<std::uint64_t>(sink, index.total_b());
  put_le<std::uint64_t>(sink, index.l_min().size());
  put_le<std::uint64_t>(sink, index.l_max().size());
  put_le<std::uint64_t>(sink, index.stats().min.peak);
  put_le<std::uint64_t>(sink, index.stats().max.peak);
  for (const CornerList* list : {&index.l_min(), &index.l_max()}) {
    for (const ParikhVector& p : *list) {
      put_le<std::uint64_t>(sink, p.x);
      put_le<std::uint64_t>(sink, p.y);
    }
  }
  if (!sink) throw IoError("failed writing index");
}

CornerIndex deserialize(std::istream& source) {
  std::array<char, 8> magic{};
  if (!source.read(magic.data(), magic.size())) {
    throw CorruptIndexError("truncated at magic");
  }
  if (magic != kIndexMagic) throw FormatError("not a corner index file");
  const auto version = get_le<std::uint32_t>(source, "version");
  if (version != kIndexVersion) {
    throw FormatError("unsupported index version " + std::to_string(version));
  }
  const auto n = get_le<std::uint64_t>(source, "n");
  const auto total_a = get_le<std::uint64_t>(source, "total_a");
  const auto total_b = get_le<std::uint64_t>(source, "total_b");
  const auto lmin_size = get_le<std::uint64_t>(source, "|l_min|");
  const auto lmax_size = get_le<std::uint64_t>(source, "|l_max|");
  CornerIndex::Stats stats;
  stats.min.peak = get_le<std::uint64_t>(source, "peak_min");
  stats.max.peak = get_le<std::uint64_t>(source, "peak_max");

  CornerList lmin = read_pairs(source, lmin_size, "l_min pairs");
  CornerList lmax = read_pairs(source, lmax_size, "l_max pairs");
  if (source.peek() != std::char_traits<char>::eof()) {
    throw CorruptIndexError("trailing bytes after l_max");
  }
  return CornerIndex::from_parts(std::move(lmin), std::move(lmax), n, total_a,
                                 total_b, stats);
}

void save_index(const CornerIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  serialize(index, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

CornerIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return deserialize(in);
}

}  // namespace jumbled
