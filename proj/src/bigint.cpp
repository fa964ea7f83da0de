#include "gasket/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace gasket {

double log_abs(const BigInt& z) {
    if (z == 0) throw std::domain_error("log_abs: zero argument");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const Rational& q) {
    return log_abs(BigInt(q.get_num())) - log_abs(BigInt(q.get_den()));
}

std::string to_decimal(const BigInt& z) { return z.get_str(10); }

BigInt parse_decimal(const std::string& s) {
    BigInt z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_decimal: not a decimal integer: " + s);
    return z;
}

}  // namespace gasket
