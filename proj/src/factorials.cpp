#include "qexpand/factorials.hpp"

namespace qx {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer double_factorial(long n) {
    if (n < -1) throw DomainError("double factorial requires n >= -1");
    if (n <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rising(const Rational& beta, unsigned long n) {
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i) r *= beta + Rational(Integer(i));
    return r;
}

Rational falling(const Rational& beta, unsigned long n) {
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i) r *= beta - Rational(Integer(i));
    return r;
}

Rational binom(const Rational& z, unsigned long n) {
    return falling(z, n) / Rational(factorial(n));
}

Rational pow_rat(const Rational& q, unsigned long n) {
    if (n == 0) return Rational(1);  // 0^0 = 1 by convention
    Rational r(1), b = q;
    unsigned long e = n;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Rational pow_int(const Rational& q, long e) {
    if (e >= 0) return pow_rat(q, static_cast<unsigned long>(e));
    if (q.is_zero()) throw DomainError("negative power of zero");
    return pow_rat(inverse(q), static_cast<unsigned long>(-e));
}

Integer pow_ui(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace qx
