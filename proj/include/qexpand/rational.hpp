#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "qexpand/errors.hpp"

namespace qx {

using Integer = mpz_class;

// Exact rational scalar. Always normalized: denominator >= 1,
// gcd(|num|, den) = 1, zero stored as 0/1. Backed by GMP.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    // Accept GMP integer expression templates (e.g. the unevaluated result of
    // a * b) directly; otherwise such arguments convert ambiguously.
    template <class E>
    Rational(const __gmp_expr<mpz_t, E>& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    // Parses the canonical text form "p" or "p/q".
    static Rational from_string(std::string_view s);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Canonical text form: "p/q" in lowest terms, "p" when q = 1,
    // leading "-" on the numerator only.
    std::string to_string() const;

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

Rational abs(const Rational& q);
Rational inverse(const Rational& q);

} // namespace qx
