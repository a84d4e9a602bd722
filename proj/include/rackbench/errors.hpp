#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rackbench {

/// Thrown when a generated set (group closure, automorphism search) grows past
/// its element cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed input: bad JSON, bad text fixtures, out-of-range indices in files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rackbench
