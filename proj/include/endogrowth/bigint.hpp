#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace endogrowth {

using BigInt = mpz_class;

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_value(const BigInt& x) {
  const mpz_srcptr p = x.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size);
  const int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
  for (int i = 0; i < n; ++i)
    h = hash_combine(h, static_cast<std::size_t>(p->_mp_d[i]));
  return h;
}

inline BigInt big_abs(const BigInt& x) { return abs(x); }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Natural log of |x| for arbitrarily large x; -inf for zero.
double log_abs(const BigInt& x);

/// x^(1/k) evaluated through logarithms, x >= 0, k >= 1.
double kth_root(const BigInt& x, std::size_t k);

/// Fits in int64_t?
bool fits_int64(const BigInt& x);
std::int64_t to_int64(const BigInt& x);

/// Integer power with nonnegative exponent.
BigInt ipow(const BigInt& base, unsigned long exp);

}  // namespace endogrowth
