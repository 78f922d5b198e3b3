#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahpthermo {

// Input violates a mathematical precondition (non-positive rate, bad probability vector).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Operand shapes disagree.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Criterion or time index outside its range.
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Exhaustive enumeration refused because N^k exceeds the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
  EnumerationCapExceeded(std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error("enumeration of " + std::to_string(requested) +
                           " strategies exceeds cap of " + std::to_string(cap)),
        requested_(requested), cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

} // namespace ahpthermo
