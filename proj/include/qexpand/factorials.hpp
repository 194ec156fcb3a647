#pragma once

#include "qexpand/rational.hpp"

namespace qx {

Integer factorial(unsigned long n);

// n!! for n >= -1, with (-1)!! = 0!! = 1. Domain error below -1.
Integer double_factorial(long n);

// Ordinary binomial with natural arguments; 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);

// Rising factorial (beta)_n = beta(beta+1)...(beta+n-1); empty product is 1.
Rational rising(const Rational& beta, unsigned long n);

// Falling factorial <beta>_n = beta(beta-1)...(beta-n+1); empty product is 1.
Rational falling(const Rational& beta, unsigned long n);

// binom(z, n) = <z>_n / n! for rational z, natural n.
Rational binom(const Rational& z, unsigned long n);

// q^n with the convention 0^0 = 1.
Rational pow_rat(const Rational& q, unsigned long n);

// q^e for any integer e; negative e inverts (domain error on 0 base).
Rational pow_int(const Rational& q, long e);

Integer pow_ui(const Integer& b, unsigned long e);

} // namespace qx
