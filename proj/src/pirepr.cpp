#include "qexpand/pirepr.hpp"

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"
#include "qexpand/oracle.hpp"
#include "qexpand/qfunc.hpp"
#include "qexpand/stirling.hpp"

namespace qx {

namespace {

StirlingTable& scratch_table() {
    thread_local StirlingTable table;
    return table;
}

// Common inner double sum of the real-power expansion at order n.
Rational alpha_term(StirlingTable& table, const Rational& alpha, unsigned n) {
    Rational outer(0);
    for (unsigned j = 1; j <= n; ++j) {
        Rational inner(0);
        for (unsigned l = 1; l <= j; ++l) {
            Rational t = Rational(factorial(2 * l) * binomial(j, l)) * q_km(table, 2 * l, 2 * n) /
                         Rational(factorial(2 * l + 2 * n));
            inner += (l % 2 ? -t : t);
        }
        Rational contrib = falling(alpha, j) / Rational(factorial(j)) * inner;
        outer += (j % 2 ? -contrib : contrib);
    }
    return outer;
}

// m-th summand of the tagged series, m >= 1.
Rational term_at(const PiTag& tag, unsigned m) {
    StirlingTable& table = scratch_table();
    switch (tag.kind) {
    case PiTag::pow8: {
        Rational t = Rational(factorial(2 * tag.k) * pow_ui(2, m)) * q_km(table, 2 * tag.k, 2 * m) /
                     Rational(factorial(2 * tag.k + 2 * m));
        return m % 2 ? -t : t;
    }
    case PiTag::sq8:
        return Rational(pow_ui(2, m), Integer(m) * Integer(m) * binomial(2 * m, m));
    case PiTag::sqrt2pow: {
        Rational t = Rational(factorial(tag.k) * pow_ui(2, m)) * q_km(table, tag.k, 2 * m) /
                     Rational(factorial(tag.k + 2 * m));
        return m % 2 ? -t : t;
    }
    case PiTag::alpha9: {
        Rational t = alpha_term(table, tag.alpha, m);
        return m % 2 ? -t : t;
    }
    case PiTag::classic_basel:
        return Rational(Integer(1), Integer(m) * Integer(m));
    case PiTag::classic_odd:
        return Rational(Integer(1), Integer(2 * m - 1) * Integer(2 * m - 1));
    case PiTag::classic_alt: {
        Rational t(Integer(1), Integer(m) * Integer(m));
        return m % 2 ? t : -t;
    }
    case PiTag::classic_central:
        return Rational(Integer(1), Integer(m) * Integer(m) * binomial(2 * m, m));
    }
    throw DomainError("unknown pi-series tag");
}

bool has_unit_head(const PiTag& tag) {
    return tag.kind == PiTag::pow8 || tag.kind == PiTag::sqrt2pow || tag.kind == PiTag::alpha9;
}

void require_k(const PiTag& tag) {
    if ((tag.kind == PiTag::pow8 || tag.kind == PiTag::sqrt2pow) && tag.k == 0)
        throw DomainError("this pi-series tag requires k >= 1");
}

// smallest t with 10^t >= v
unsigned mag10(const Integer& v) {
    unsigned t = 0;
    Integer p = 1;
    while (p < v) {
        p *= 10;
        ++t;
    }
    return t;
}

FixNum nth_root_of(const Rational& value, unsigned M, unsigned digits) {
    if (value.is_zero()) throw DomainError("root estimate of a vanished term");
    Rational a = abs(value);
    unsigned lead = mag10(a.denominator() / a.numerator() + 1);
    FixNum v = fix_from_rational(a, digits + lead + 5);
    return fix_pow_rat(v, Rational(1, static_cast<long>(M)), digits);
}

} // namespace

PiTag PiTag::parse(const std::string& repr, unsigned k, const Rational& alpha) {
    PiTag tag;
    tag.k = k;
    tag.alpha = alpha;
    if (repr == "pow8")
        tag.kind = pow8;
    else if (repr == "sq8")
        tag.kind = sq8;
    else if (repr == "sqrt2" || repr == "sqrt2pow")
        tag.kind = sqrt2pow;
    else if (repr == "alpha9")
        tag.kind = alpha9;
    else if (repr == "classic-basel")
        tag.kind = classic_basel;
    else if (repr == "classic-odd")
        tag.kind = classic_odd;
    else if (repr == "classic-alt")
        tag.kind = classic_alt;
    else if (repr == "classic-central")
        tag.kind = classic_central;
    else
        throw UsageError("unknown pi-series tag: " + repr);
    require_k(tag);
    return tag;
}

std::string PiTag::name() const {
    switch (kind) {
    case pow8: return "pow8(" + std::to_string(k) + ")";
    case sq8: return "sq8";
    case sqrt2pow: return "sqrt2pow(" + std::to_string(k) + ")";
    case alpha9: return "alpha9(" + alpha.to_string() + ")";
    case classic_basel: return "classic-basel";
    case classic_odd: return "classic-odd";
    case classic_alt: return "classic-alt";
    case classic_central: return "classic-central";
    }
    return "?";
}

Rational partial_sum(const PiTag& tag, unsigned M) {
    require_k(tag);
    Rational sum = has_unit_head(tag) ? Rational(1) : Rational(0);
    for (unsigned m = 1; m <= M; ++m) sum += term_at(tag, m);
    return sum;
}

Rational alpha9_partial(const Rational& alpha, unsigned M) {
    PiTag tag;
    tag.kind = PiTag::alpha9;
    tag.alpha = alpha;
    return partial_sum(tag, M);
}

FixNum target_value(const PiTag& tag, unsigned digits) {
    require_k(tag);
    FixNum p = pi_ref(digits);
    FixNum p2 = fix_mul(p, p);
    switch (tag.kind) {
    case PiTag::pow8:
        return fix_pow_ui(fix_mul_rat(p2, Rational(1, 8)), tag.k);
    case PiTag::sq8:
        return fix_mul_rat(p2, Rational(1, 8));
    case PiTag::sqrt2pow: {
        FixNum s2 = sqrt_fp(Rational(2), digits);
        FixNum base = fix_mul_rat(fix_mul(p, s2), Rational(1, 4));
        return fix_pow_ui(base, tag.k);
    }
    case PiTag::alpha9: {
        FixNum base = fix_mul_rat(p2, Rational(1, 9));
        if (tag.alpha.is_integer() && tag.alpha.sign() >= 0)
            return fix_pow_ui(base, tag.alpha.numerator().get_ui());
        return fix_pow_rat(base, tag.alpha, digits);
    }
    case PiTag::classic_basel:
        return fix_mul_rat(p2, Rational(1, 6));
    case PiTag::classic_odd:
        return fix_mul_rat(p2, Rational(1, 8));
    case PiTag::classic_alt:
        return fix_mul_rat(p2, Rational(1, 12));
    case PiTag::classic_central:
        return fix_mul_rat(p2, Rational(1, 18));
    }
    throw DomainError("unknown pi-series tag");
}

FixNum residual(const PiTag& tag, unsigned M, unsigned digits) {
    FixNum target = target_value(tag, digits);
    FixNum partial = fix_from_rational(partial_sum(tag, M), digits);
    return fix_abs(fix_sub(partial, target));
}

LEstimate empirical_L(unsigned k, unsigned M, unsigned digits) {
    if (k == 0) throw DomainError("empirical_L requires k >= 1");
    if (M < 10) throw DomainError("empirical_L requires M >= 10");
    StirlingTable& table = scratch_table();
    std::vector<Rational> a(M + 1);
    for (unsigned m = 1; m <= M; ++m)
        a[m] = Rational(factorial(2 * k) * pow_ui(2, m)) * q_km(table, 2 * k, 2 * m) /
               Rational(factorial(2 * k + 2 * m));
    LEstimate est;
    est.root = nth_root_of(a[M], M, digits);
    est.ratios.reserve(M - 1);
    for (unsigned m = 2; m <= M; ++m)
        est.ratios.push_back(fix_from_rational(abs(a[m] / a[m - 1]), digits));
    return est;
}

FixNum root_estimate(const PiTag& tag, unsigned M, unsigned digits) {
    if (M == 0) throw DomainError("root_estimate requires M >= 1");
    return nth_root_of(term_at(tag, M), M, digits);
}

} // namespace qx
