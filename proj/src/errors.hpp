#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minimod {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical failure; `position` is a byte offset into the input.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct type_error : error {
  using error::error;
};

// A configured resource ceiling was hit; the operation aborted cleanly.
struct budget_error : error {
  using error::error;
};

// An internal invariant failed. Always a bug, never a user error.
struct internal_error : error {
  using error::error;
};

struct invalid_argument_error : error {
  using error::error;
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace minimod
