#include "endogrowth/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace endogrowth {

double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double kth_root(const BigInt& x, std::size_t k) {
  if (x == 0) return 0.0;
  if (x == 1 || k == 1) return k == 1 ? x.get_d() : 1.0;
  return std::exp(log_abs(x) / static_cast<double>(k));
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

bool fits_int64(const BigInt& x) { return x.fits_slong_p(); }

std::int64_t to_int64(const BigInt& x) {
  if (!x.fits_slong_p())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace endogrowth
