#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "f2/error.hpp"

namespace f2 {

/// Group orders. 33!/2 (about 4.3e36) is the largest value the library
/// produces, which fits comfortably below 2^128.
using Order = unsigned __int128;

inline std::string to_string(Order value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline Order factorial(unsigned n) {
  if (n > 34) throw DomainError("factorial(" + std::to_string(n) + ") overflows 128 bits");
  Order result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

/// Order of the alternating group on n points (1 for n < 2).
inline Order alternating_order(unsigned n) { return n < 2 ? 1 : factorial(n) / 2; }

/// d (d-1) ... (d-k+1).
inline Order falling_factorial(unsigned d, unsigned k) {
  Order result = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (i >= d) return 0;
    result *= d - i;
  }
  return result;
}

inline bool fits_u64(Order value) { return (value >> 64) == 0; }

inline std::uint64_t to_u64(Order value) {
  if (!fits_u64(value)) throw DomainError("order " + to_string(value) + " does not fit 64 bits");
  return static_cast<std::uint64_t>(value);
}

}  // namespace f2
