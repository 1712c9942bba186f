#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jumbled/parikh.hpp"

namespace jumbled {

// Character mapping of external text onto the letters a and b.
// `zero_one` maps '0' to a and '1' to b.
enum class Alphabet { ab, zero_one };

// Converts external text into the canonical a/b form. ASCII whitespace is
// skipped; any other foreign character throws InputFormatError carrying its
// byte offset in `raw`.
std::string normalize_text(std::string_view raw, Alphabet alphabet);

// s = a^{u_1} b^{v_1} ... a^{u_r} b^{v_r}. Only a_runs[0] and b_runs[r-1]
// may be zero; r == 0 encodes the empty string.
struct RunLengthEncoding {
  std::vector<Count> a_runs;
  std::vector<Count> b_runs;

  std::size_t pairs() const { return a_runs.size(); }
  bool empty() const { return a_runs.empty(); }

  friend bool operator==(const RunLengthEncoding&,
                         const RunLengthEncoding&) = default;
};

// Throws InputFormatError on anything other than 'a'/'b'.
RunLengthEncoding encode(std::string_view s);

// Throws MalformedEncodingError when the encoding breaks its invariants.
std::string decode(const RunLengthEncoding& rle);

// Checks the padded-endpoint invariants without decoding.
void validate(const RunLengthEncoding& rle);

// Number of non-zero runs.
std::size_t rho(const RunLengthEncoding& rle);

// Length of the padded encoding, 2r, counting u_1 and v_r even when zero.
// The empty string counts as the single padded pair (0,0), i.e. 2.
std::size_t padded_length(const RunLengthEncoding& rle);

}  // namespace jumbled
