#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdet {

// Precondition or argument violation (bad group parameters, gcd conditions, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A claimed value failed exact recomputation.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : UsageError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gdet
