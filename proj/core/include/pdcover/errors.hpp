#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdcover {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed arguments: out-of-range vertex/edge ids, mismatched ground sets,
// sets containing bits beyond the ground set.
class InputDomainError : public Error {
 public:
  explicit InputDomainError(const std::string& what) : Error(what) {}
};

// Input file could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}
  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// A size cap was exceeded (ground set, edge count, enumeration limits).
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// The instance admits no feasible cover. Carries one violated set as a
// witness (bitmask over the ground set).
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::uint64_t core_bits, int n)
      : Error(what), core_bits_(core_bits), n_(n) {}
  std::uint64_t core_bits() const { return core_bits_; }
  int ground_size() const { return n_; }

 private:
  std::uint64_t core_bits_;
  int n_;
};

// An always-on internal consistency check failed. Indicates a bug.
class CheckFailure : public Error {
 public:
  explicit CheckFailure(const std::string& what) : Error(what) {}
};

// Process exit codes used by the command layer.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitCapacity = 3,
  kExitParse = 4,
  kExitLemmaViolation = 5,
};

namespace detail {
[[noreturn]] void check_failed(const char* expr, const char* file, int line,
                               const std::string& msg);
}  // namespace detail

// Contract checks stay on in release builds; instances are desk-scale and the
// whole point of the artifact is that the invariants are verified on every run.
#define PDCOVER_CHECK(cond, msg)                                         \
  do {                                                                   \
    if (!(cond)) ::pdcover::detail::check_failed(#cond, __FILE__, __LINE__, (msg)); \
  } while (0)

}  // namespace pdcover
