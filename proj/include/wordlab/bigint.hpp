#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wordlab {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

/// Non-negative residue of v modulo m (m > 0).
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

/// p-adic valuation; v must be nonzero.
inline unsigned valuation(BigInt v, std::uint64_t p) {
  if (v < 0) v = -v;
  unsigned s = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++s;
  }
  return s;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace wordlab
