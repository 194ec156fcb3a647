#include "qexpand/fixnum.hpp"

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"

namespace qx {

namespace {

Integer ten_pow(unsigned long n) { return pow_ui(10, n); }

Integer cdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer isqrt_floor(const Integer& a) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// smallest t with 10^t >= v (v >= 0)
unsigned mag10(const Integer& v) {
    unsigned t = 0;
    Integer p = 1;
    while (p < v) {
        p *= 10;
        ++t;
    }
    return t;
}

void align(const FixNum& a, const FixNum& b, FixNum& a2, FixNum& b2) {
    unsigned s = std::max(a.scale, b.scale);
    a2 = fix_rescale(a, s);
    b2 = fix_rescale(b, s);
}

} // namespace

Rational FixNum::value() const { return Rational(man, ten_pow(scale)); }

Rational FixNum::error_bound() const { return Rational(err, ten_pow(scale)); }

unsigned FixNum::certified_digits() const {
    unsigned t = mag10(err);
    return scale >= t ? scale - t : 0;
}

std::string FixNum::to_string() const {
    unsigned d = certified_digits();
    Integer m = d == scale ? man : round_div(man, ten_pow(scale - d));
    bool neg = m < 0;
    Integer a = neg ? Integer(-m) : m;
    Integer ip = a / ten_pow(d);
    Integer fp = a % ten_pow(d);
    std::string s = neg ? "-" : "";
    s += ip.get_str();
    if (d > 0) {
        std::string frac = fp.get_str();
        s += "." + std::string(d - frac.size(), '0') + frac;
    }
    return s;
}

Integer round_div(const Integer& a, const Integer& b) {
    if (b <= 0) throw DomainError("round_div requires positive divisor");
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Ties go away from zero so that round_div(-a, b) == -round_div(a, b).
    Integer twice = 2 * r;
    if (twice > b || (twice == b && a >= 0)) ++q;
    return q;
}

FixNum fix_from_rational(const Rational& q, unsigned scale) {
    FixNum out;
    out.scale = scale;
    Integer scaled_num = q.numerator() * ten_pow(scale);
    out.man = round_div(scaled_num, q.denominator());
    Integer back = out.man * q.denominator();
    out.err = (back == scaled_num) ? 0 : 1;
    return out;
}

FixNum fix_rescale(const FixNum& x, unsigned new_scale) {
    if (new_scale == x.scale) return x;
    FixNum out;
    out.scale = new_scale;
    if (new_scale > x.scale) {
        Integer f = ten_pow(new_scale - x.scale);
        out.man = x.man * f;
        out.err = x.err * f;
    } else {
        Integer f = ten_pow(x.scale - new_scale);
        out.man = round_div(x.man, f);
        out.err = cdiv(x.err, f) + 1;
    }
    return out;
}

FixNum fix_add(const FixNum& a, const FixNum& b) {
    FixNum x, y;
    align(a, b, x, y);
    FixNum out;
    out.scale = x.scale;
    out.man = x.man + y.man;
    out.err = x.err + y.err;
    return out;
}

FixNum fix_sub(const FixNum& a, const FixNum& b) { return fix_add(a, fix_neg(b)); }

FixNum fix_neg(const FixNum& a) {
    FixNum out = a;
    out.man = -out.man;
    return out;
}

FixNum fix_abs(const FixNum& a) {
    FixNum out = a;
    if (out.man < 0) out.man = -out.man;
    return out;
}

FixNum fix_mul(const FixNum& a, const FixNum& b) {
    FixNum x, y;
    align(a, b, x, y);
    Integer p = ten_pow(x.scale);
    FixNum out;
    out.scale = x.scale;
    out.man = round_div(x.man * y.man, p);
    Integer ma = abs(x.man), mb = abs(y.man);
    out.err = cdiv(ma * y.err + mb * x.err + x.err * y.err, p) + 1;
    return out;
}

FixNum fix_mul_rat(const FixNum& a, const Rational& q) {
    FixNum out;
    out.scale = a.scale;
    out.man = round_div(a.man * q.numerator(), q.denominator());
    Integer pn = abs(Integer(q.numerator()));
    out.err = cdiv(a.err * pn, q.denominator()) + 1;
    return out;
}

FixNum fix_div(const FixNum& a, const FixNum& b) {
    FixNum x, y;
    align(a, b, x, y);
    Integer mb = abs(y.man);
    if (mb <= y.err)
        throw PrecisionError("division by a value not certified away from zero");
    Integer p = ten_pow(x.scale);
    FixNum out;
    out.scale = x.scale;
    Integer num = x.man * p;
    Integer q = y.man > 0 ? round_div(num, y.man) : round_div(-num, mb);
    out.man = q;
    Integer qa = abs(q);
    out.err = cdiv(x.err * p + (qa + 1) * y.err, mb - y.err) + 1;
    return out;
}

FixNum fix_sqrt(const FixNum& a) {
    if (a.man < 0 && -a.man > a.err)
        throw DomainError("sqrt of a negative value");
    FixNum out;
    out.scale = a.scale;
    Integer p = ten_pow(a.scale);
    if (a.man <= a.err) {
        // Value lies in [0, 2 err ulp): bound sqrt directly.
        out.man = 0;
        out.err = isqrt_floor(2 * a.err * p) + 2;
        return out;
    }
    Integer v = a.man * p;
    Integer r = isqrt_floor(v);
    out.man = r;
    // Propagate through the lower edge of the certified interval so the
    // derivative bound is valid across all of it.
    Integer r_lo = isqrt_floor((a.man - a.err) * p);
    out.err = cdiv(a.err * p, 2 * r_lo) + 2;
    return out;
}

FixNum fix_pow_ui(const FixNum& a, unsigned long e) {
    FixNum out;
    out.scale = a.scale;
    out.man = ten_pow(a.scale);
    out.err = 0;
    FixNum base = a;
    while (e > 0) {
        if (e & 1) out = fix_mul(out, base);
        e >>= 1;
        if (e > 0) base = fix_mul(base, base);
    }
    return out;
}

bool fix_close(const FixNum& a, const FixNum& b, const Rational& tol) {
    Rational gap = abs(a.value() - b.value()) + a.error_bound() + b.error_bound();
    return gap <= tol;
}

} // namespace qx
