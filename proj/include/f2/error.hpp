#pragma once

#include <stdexcept>
#include <string>

namespace f2 {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (bad degree, non-prime p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parse failure in cycle notation or in the catalog format.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A group is too large to enumerate under the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned long long cap)
      : Error(what + " exceeds the enumeration cap of " + std::to_string(cap)),
        cap_(cap) {}
  unsigned long long cap() const noexcept { return cap_; }

 private:
  unsigned long long cap_;
};

/// An internal consistency check (Lagrange, exactness re-check, ...) failed.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace f2
