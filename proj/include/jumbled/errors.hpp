#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumbled {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text contains a character outside the configured alphabet.
struct InputFormatError : Error {
  InputFormatError(std::size_t offset, char found)
      : Error("invalid character '" + std::string(1, found) + "' at offset " +
              std::to_string(offset)),
        offset(offset) {}
  std::size_t offset;
};

// Run-length encoding violates the padded-endpoint convention.
struct MalformedEncodingError : Error {
  using Error::Error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

// Brute-force oracle refused an input above its safety bound.
struct OracleLimitError : Error {
  using Error::Error;
};

// Bad magic or unsupported version in an index file.
struct FormatError : Error {
  using Error::Error;
};

// Index file (or index parts) failed a structural check; `check` names it.
struct CorruptIndexError : Error {
  explicit CorruptIndexError(std::string check_name)
      : Error("corrupt index: " + check_name), check(std::move(check_name)) {}
  std::string check;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace jumbled
