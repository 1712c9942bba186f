#include "jumbled/rle.hpp"

#include "jumbled/errors.hpp"

namespace jumbled {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::string normalize_text(std::string_view raw, Alphabet alphabet) {
  const char letter_a = alphabet == Alphabet::ab ? 'a' : '0';
  const char letter_b = alphabet == Alphabet::ab ? 'b' : '1';
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c == letter_a) {
      out.push_back('a');
    } else if (c == letter_b) {
      out.push_back('b');
    } else if (!is_space(c)) {
      throw InputFormatError(i, c);
    }
  }
  return out;
}

RunLengthEncoding encode(std::string_view s) {
  RunLengthEncoding rle;
  std::size_t i = 0;
  while (i < s.size()) {
    Count a = 0;
    Count b = 0;
    while (i < s.size() && s[i] == 'a') {
      ++a;
      ++i;
    }
    while (i < s.size() && s[i] == 'b') {
      ++b;
      ++i;
    }
    if (a == 0 && b == 0) throw InputFormatError(i, s[i]);
    rle.a_runs.push_back(a);
    rle.b_runs.push_back(b);
  }
  return rle;
}

void validate(const RunLengthEncoding& rle) {
  const std::size_t r = rle.pairs();
  if (rle.b_runs.size() != r) {
    throw MalformedEncodingError("a-run and b-run counts differ");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0 && rle.a_runs[i] == 0) {
      throw MalformedEncodingError("zero a-run at interior position " +
                                   std::to_string(i + 1));
    }
    if (i + 1 < r && rle.b_runs[i] == 0) {
      throw MalformedEncodingError("zero b-run at interior position " +
                                   std::to_string(i + 1));
    }
  }
  if (r == 1 && rle.a_runs[0] == 0 && rle.b_runs[0] == 0) {
    throw MalformedEncodingError("empty string must have no runs");
  }
}

std::string decode(const RunLengthEncoding& rle) {
  validate(rle);
  std::string s;
  for (std::size_t i = 0; i < rle.pairs(); ++i) {
    s.append(rle.a_runs[i], 'a');
    s.append(rle.b_runs[i], 'b');
  }
  return s;
}

std::size_t rho(const RunLengthEncoding& rle) {
  std::size_t n = 0;
  for (Count u : rle.a_runs) n += u != 0;
  for (Count v : rle.b_runs) n += v != 0;
  return n;
}

std::size_t padded_length(const RunLengthEncoding& rle) {
  return rle.empty() ? 2 : 2 * rle.pairs();
}

}  // namespace jumbled
