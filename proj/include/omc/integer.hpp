#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "omc/error.hpp"

namespace omc {

using Integer = boost::multiprecision::cpp_int;

/// Binomial coefficient by the multiplicative formula with exact division.
/// C(n, k) is zero whenever n < 0, k < 0 or k > n.
inline Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

inline Integer pow2(unsigned exponent) {
  Integer result = 1;
  result <<= exponent;
  return result;
}

inline std::string to_decimal(const Integer& value) { return value.str(); }

/// Checked accumulation for signed tallies kept in machine words.
inline void checked_add(std::int64_t& acc, std::int64_t delta) {
  if (__builtin_add_overflow(acc, delta, &acc))
    throw Error(ErrorKind::Overflow, "signed tally left the 64-bit range");
}

}  // namespace omc
