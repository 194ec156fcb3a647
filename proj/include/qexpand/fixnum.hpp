#pragma once

#include <string>

#include "qexpand/rational.hpp"

namespace qx {

// Base-10 fixed-point scalar: value = man * 10^-scale, with a certified
// error bound err * 10^-scale. All operations propagate err conservatively.
struct FixNum {
    Integer man = 0;
    unsigned scale = 0;
    Integer err = 0;

    Rational value() const;
    Rational error_bound() const;

    // Digits after the point still certified given the accumulated error.
    unsigned certified_digits() const;

    // Decimal text truncated to the certified digits.
    std::string to_string() const;
};

// round-to-nearest a/b for b > 0.
Integer round_div(const Integer& a, const Integer& b);

FixNum fix_from_rational(const Rational& q, unsigned scale);
FixNum fix_rescale(const FixNum& x, unsigned new_scale);

FixNum fix_add(const FixNum& a, const FixNum& b);
FixNum fix_sub(const FixNum& a, const FixNum& b);
FixNum fix_neg(const FixNum& a);
FixNum fix_abs(const FixNum& a);
FixNum fix_mul(const FixNum& a, const FixNum& b);
FixNum fix_mul_rat(const FixNum& a, const Rational& q);
FixNum fix_div(const FixNum& a, const FixNum& b);
FixNum fix_sqrt(const FixNum& a);
FixNum fix_pow_ui(const FixNum& a, unsigned long e);

// |a - b| <= tol as certified values (true only if certain).
bool fix_close(const FixNum& a, const FixNum& b, const Rational& tol);

} // namespace qx
