#ifndef GASKET_BIGINT_HPP
#define GASKET_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace gasket {

// Exact arithmetic is delegated to GMP. BigInt/Rational are the only numeric
// types allowed to carry coefficients and measure weights; doubles appear
// only on the dynamics/geometry side.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline BigInt pow3(unsigned long n) { return pow_ui(3, n); }
inline BigInt pow2(unsigned long n) { return pow_ui(2, n); }

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// log|z| for nonzero z, robust for values far outside double range.
double log_abs(const BigInt& z);
double log_abs(const Rational& q);

std::string to_decimal(const BigInt& z);
BigInt parse_decimal(const std::string& s);

}  // namespace gasket

#endif
