#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jumbled::testing {

inline const std::string kExample = "aabababbaaabbaabbb";

// Every binary string of exactly `length` characters, in lexicographic order.
inline std::vector<std::string> all_strings(std::size_t length) {
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << length);
  for (std::size_t bits = 0; bits < (std::size_t{1} << length); ++bits) {
    std::string s(length, 'a');
    for (std::size_t i = 0; i < length; ++i) {
      if (bits >> (length - 1 - i) & 1) s[i] = 'b';
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::string reversed(std::string s) { return {s.rbegin(), s.rend()}; }

inline std::string complemented(std::string s) {
  for (char& c : s) c = c == 'a' ? 'b' : 'a';
  return s;
}

}  // namespace jumbled::testing
