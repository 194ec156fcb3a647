#include "qexpand/oracle.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"

namespace qx {

unsigned oracle_max_digits() {
    static unsigned cap = [] {
        if (const char* env = std::getenv("QEXPAND_ORACLE_MAX_DIGITS")) {
            long v = std::atol(env);
            if (v >= 10) return static_cast<unsigned>(v);
        }
        return 1000u;
    }();
    return cap;
}

// Internal cores run at a caller-chosen working scale and never consult the
// precision ceiling; only the public entry points do.
namespace {

constexpr unsigned kGuard = 10;

void check_digits(unsigned digits) {
    if (digits == 0) throw DomainError("precision must be at least 1 digit");
    if (digits > oracle_max_digits())
        throw PrecisionError("requested " + std::to_string(digits) +
                             " digits exceeds the configured ceiling of " +
                             std::to_string(oracle_max_digits()));
}

Integer ten_pow(unsigned long n) { return pow_ui(10, n); }

Integer cdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

FixNum fix_exact_one(unsigned scale) { return FixNum{ten_pow(scale), scale, 0}; }

// floor-divide arctan(1/m) mantissa at scale W; error below 2*terms+1 ulp.
FixNum arctan_inv_ui(unsigned long m, unsigned W) {
    Integer msq = Integer(m) * Integer(m);
    Integer term = ten_pow(W) / m;
    Integer acc = 0;
    unsigned long terms = 0;
    for (unsigned long j = 0; term != 0; ++j, ++terms) {
        Integer contrib = term / (2 * j + 1);
        if (j % 2)
            acc -= contrib;
        else
            acc += contrib;
        term /= msq;
    }
    return FixNum{acc, W, Integer(2 * terms + 1)};
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

FixNum pi_at(unsigned W) {
    static std::map<unsigned, FixNum> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(W);
        if (it != cache.end()) return it->second;
    }
    unsigned inner = W + kGuard;
    FixNum a = arctan_inv_ui(5, inner);
    FixNum b = arctan_inv_ui(239, inner);
    FixNum v;
    v.scale = inner;
    v.man = 16 * a.man - 4 * b.man;
    v.err = 16 * a.err + 4 * b.err;
    v = fix_rescale(v, W);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache.emplace(W, v);
    return v;
}

// Exact-rational partial sum of atanh(u) for rational |u| < 1, tail certified.
struct RatSum {
    Rational value;
    Rational tail;
};

RatSum atanh_rational(const Rational& u, unsigned W) {
    Rational u2 = u * u;
    Rational cutoff(Integer(1), 4 * ten_pow(W));
    Rational power = u;  // u^{2j+1}
    Rational sum(0);
    for (unsigned j = 0;; ++j) {
        sum += power / Rational(2 * static_cast<long>(j) + 1);
        power *= u2;
        Rational tail = abs(power) / (Rational(1) - u2);
        if (tail < cutoff) return {sum, tail};
        if (j > 1000000) throw InternalInconsistency("atanh series failed to converge");
    }
}

FixNum fix_from_ratsum(const RatSum& rs, unsigned W) {
    FixNum out = fix_from_rational(rs.value, W);
    out.err += cdiv(rs.tail.numerator() * ten_pow(W), rs.tail.denominator());
    return out;
}

FixNum ln10_at(unsigned W) {
    static std::map<unsigned, FixNum> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(W);
        if (it != cache.end()) return it->second;
    }
    // ln 10 = 6 atanh(1/3) + 2 atanh(1/9)
    RatSum a = atanh_rational(Rational(1, 3), W + 2);
    RatSum b = atanh_rational(Rational(1, 9), W + 2);
    RatSum combined{Rational(6) * a.value + Rational(2) * b.value,
                    Rational(6) * a.tail + Rational(2) * b.tail};
    FixNum v = fix_rescale(fix_from_ratsum(combined, W + 2), W);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache.emplace(W, v);
    return v;
}

FixNum sqrt_core(const Rational& x, unsigned W) {
    if (x.sign() < 0) throw DomainError("sqrt of a negative rational");
    Integer n2 = round_div(x.numerator() * ten_pow(2 * W), x.denominator());
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n2.get_mpz_t());
    return FixNum{r, W, 2};
}

// arcsin Maclaurin coefficients binom(2n,n)/(4^n(2n+1)), generated stepwise.
Rational next_arcsin_coeff(const Rational& c, unsigned n) {
    // c_{n+1} = c_n (2n+1)^2 / (2(n+1)(2n+3))
    Integer top = Integer(2 * n + 1) * Integer(2 * n + 1);
    Integer bot = Integer(2) * Integer(n + 1) * Integer(2 * n + 3);
    return c * Rational(top, bot);
}

// |x| <= 1/2 branch: exact-rational partial sum with certified tail.
FixNum arcsin_small_rational(const Rational& x, unsigned W) {
    Rational x2 = x * x;
    Rational cutoff(Integer(1), 4 * ten_pow(W));
    Rational c(1);
    Rational power = x;  // x^{2n+1}
    Rational sum(0);
    for (unsigned n = 0;; ++n) {
        sum += c * power;
        c = next_arcsin_coeff(c, n);
        power *= x2;
        // c_m <= 1 for every m, so the tail is below |x|^{2n+3}/(1-x^2).
        Rational tail = abs(power) / (Rational(1) - x2);
        if (tail < cutoff) {
            FixNum out = fix_from_rational(sum, W);
            out.err += 1;
            return out;
        }
        if (n > 1000000) throw InternalInconsistency("arcsin series failed to converge");
    }
}

// Same series on an already-rounded argument 0 <= y < 0.52.
FixNum arcsin_small_fix(const FixNum& y, unsigned W) {
    FixNum yy = fix_rescale(y, W);
    FixNum y2 = fix_mul(yy, yy);
    FixNum p = yy;
    FixNum acc = yy;  // c_0 = 1
    Rational c(1);
    for (unsigned n = 0;; ++n) {
        c = next_arcsin_coeff(c, n);
        p = fix_mul(p, y2);
        acc = fix_add(acc, fix_mul_rat(p, c));
        // The propagated error of p settles near 2 ulp even as the value
        // vanishes, so the cutoff must sit above that floor; the dropped
        // tail of a sub-4-ulp term is covered by the slack added below.
        if (abs(p.man) + p.err < 4) break;
        if (n > 1000000) throw InternalInconsistency("arcsin series failed to converge");
    }
    acc.err += 2;
    return acc;
}

FixNum arcsin_core(const Rational& x, unsigned W) {
    Rational ax = abs(x);
    if (ax > Rational(1)) throw DomainError("arcsin requires |x| <= 1");
    FixNum r;
    if (ax == Rational(1)) {
        r = fix_mul_rat(pi_at(W), Rational(1, 2));
    } else if (ax <= Rational(1, 2)) {
        r = arcsin_small_rational(ax, W);
    } else {
        // arcsin x = pi/2 - 2 arcsin(sqrt((1-x)/2)) on (1/2, 1)
        Rational inner = (Rational(1) - ax) / Rational(2);
        FixNum root = sqrt_core(inner, W);
        FixNum asin_root = arcsin_small_fix(root, W);
        r = fix_sub(fix_mul_rat(pi_at(W), Rational(1, 2)), fix_mul_rat(asin_root, Rational(2)));
    }
    if (x.sign() < 0) r = fix_neg(r);
    return r;
}

FixNum arccos_core(const Rational& x, unsigned W) {
    FixNum half_pi = fix_mul_rat(pi_at(W), Rational(1, 2));
    return fix_sub(half_pi, arcsin_core(x, W));
}

FixNum ln_core(const FixNum& x, unsigned W) {
    if (x.man <= x.err)
        throw PrecisionError("ln of a value not certified positive");
    // Normalize to m in [1, 10) by shifting the decimal point.
    unsigned nd = static_cast<unsigned>(x.man.get_str().size());
    long e = static_cast<long>(nd) - 1 - static_cast<long>(x.scale);
    FixNum m{x.man, nd - 1, x.err};
    m = fix_rescale(m, W);
    // Six halvings land the argument within 10^(1/64) of 1.
    for (int i = 0; i < 6; ++i) m = fix_sqrt(m);
    FixNum one = fix_exact_one(W);
    FixNum u = fix_div(fix_sub(m, one), fix_add(m, one));
    FixNum u2 = fix_mul(u, u);
    FixNum p = u;
    FixNum acc = u;
    for (unsigned j = 1;; ++j) {
        p = fix_mul(p, u2);
        // Cutoff sits above the ~2 ulp error floor of repeated fix_mul;
        // the dropped sub-4-ulp tail is covered by the slack below.
        if (abs(p.man) + p.err < 4) break;
        acc = fix_add(acc, fix_mul_rat(p, Rational(Integer(1), Integer(2 * j + 1))));
        if (j > 1000000) throw InternalInconsistency("atanh series failed to converge");
    }
    acc.err += 3;
    FixNum ln_m = fix_mul_rat(acc, Rational(128));
    if (e == 0) return ln_m;
    return fix_add(ln_m, fix_mul_rat(ln10_at(W), Rational(static_cast<long>(e))));
}

FixNum arccosh_core(const Rational& x, unsigned W) {
    if (x < Rational(1)) throw DomainError("arccosh requires x >= 1");
    if (x == Rational(1)) return FixNum{0, W, 0};
    FixNum s = sqrt_core(x * x - Rational(1), W);
    FixNum arg = fix_add(fix_from_rational(x, W), s);
    return ln_core(arg, W);
}

FixNum arcsinh_core(const Rational& x, unsigned W) {
    if (x.sign() < 0) return fix_neg(arcsinh_core(-x, W));
    if (x.is_zero()) return FixNum{0, W, 0};
    FixNum s = sqrt_core(x * x + Rational(1), W);
    FixNum arg = fix_add(fix_from_rational(x, W), s);
    return ln_core(arg, W);
}

FixNum exp_core(const FixNum& x, unsigned W) {
    FixNum t = fix_rescale(x, W);
    // Halve until |t| <= 1/2, then Taylor, then square back.
    unsigned s = 0;
    Rational bound = abs(t.value()) + t.error_bound();
    while (bound > Rational(1, 2)) {
        bound /= Rational(2);
        ++s;
        if (s > 64) throw PrecisionError("exp argument too large");
    }
    FixNum y = s ? fix_mul_rat(t, Rational(Integer(1), pow_ui(2, s))) : t;
    FixNum one = fix_exact_one(W);
    FixNum acc = fix_add(one, y);
    FixNum p = y;
    for (unsigned n = 2;; ++n) {
        p = fix_mul(p, y);
        p = fix_mul_rat(p, Rational(Integer(1), Integer(n)));
        // Cutoff sits above the ~2 ulp error floor of repeated fix_mul;
        // the dropped sub-4-ulp tail is covered by the slack below.
        if (abs(p.man) + p.err < 4) break;
        acc = fix_add(acc, p);
        if (n > 1000000) throw InternalInconsistency("exp series failed to converge");
    }
    acc.err += 5;
    for (unsigned i = 0; i < s; ++i) acc = fix_mul(acc, acc);
    return acc;
}

FixNum pow_rat_core(const FixNum& v, const Rational& pq, unsigned W) {
    if (pq.is_zero()) return fix_exact_one(W);
    FixNum lnv = ln_core(fix_rescale(v, W), W);
    FixNum t = fix_mul_rat(lnv, pq);
    return exp_core(t, W);
}

} // namespace

FixNum pi_ref(unsigned digits) {
    if (digits < 10) throw DomainError("pi_ref requires at least 10 digits");
    check_digits(digits);
    return pi_at(digits);
}

FixNum sqrt_fp(const Rational& x, unsigned digits) {
    check_digits(digits);
    return fix_rescale(sqrt_core(x, digits + kGuard), digits);
}

FixNum arcsin_fp(const Rational& x, unsigned digits) {
    check_digits(digits);
    return fix_rescale(arcsin_core(x, digits + kGuard), digits);
}

FixNum arccos_fp(const Rational& x, unsigned digits) {
    check_digits(digits);
    if (abs(x) > Rational(1)) throw DomainError("arccos requires |x| <= 1");
    return fix_rescale(arccos_core(x, digits + kGuard), digits);
}

FixNum arccosh_fp(const Rational& x, unsigned digits) {
    check_digits(digits);
    return fix_rescale(arccosh_core(x, digits + kGuard), digits);
}

FixNum arcsinh_fp(const Rational& x, unsigned digits) {
    check_digits(digits);
    return fix_rescale(arcsinh_core(x, digits + kGuard), digits);
}

FixNum ln_fp(const Rational& x, unsigned digits) {
    check_digits(digits);
    if (x.sign() <= 0) throw DomainError("ln requires x > 0");
    unsigned W = digits + kGuard;
    return fix_rescale(ln_core(fix_from_rational(x, W), W), digits);
}

FixNum fix_ln(const FixNum& x, unsigned digits) {
    check_digits(digits);
    unsigned W = std::max(x.scale, digits + kGuard);
    return fix_rescale(ln_core(fix_rescale(x, W), W), digits);
}

FixNum fix_exp(const FixNum& x, unsigned digits) {
    check_digits(digits);
    unsigned W = std::max(x.scale, digits + kGuard);
    return fix_rescale(exp_core(x, W), digits);
}

FixNum fix_pow_rat(const FixNum& v, const Rational& pq, unsigned digits) {
    check_digits(digits);
    unsigned W = std::max(v.scale, digits + 2 * kGuard);
    return fix_rescale(pow_rat_core(v, pq, W), digits);
}

namespace {

Rational variable_at(Variable var, const Rational& x) {
    switch (var) {
    case Variable::x: return x;
    case Variable::x_minus_1: return x - Rational(1);
    case Variable::one_minus_x: return Rational(1) - x;
    case Variable::x_plus_1: return x + Rational(1);
    }
    throw DomainError("unknown series variable");
}

CompareReport reject(std::string note) {
    CompareReport rep;
    rep.domain_ok = false;
    rep.note = std::move(note);
    return rep;
}

} // namespace

CompareReport compare(CompareExpr expr, unsigned k, const Rational& alpha,
                      const Rational& x, unsigned M, unsigned digits) {
    check_digits(digits);
    if (M == 0) throw DomainError("compare requires M >= 1");
    unsigned W = digits + kGuard;

    CoeffSeries full;
    Rational rho;
    FixNum direct;

    switch (expr) {
    case CompareExpr::arcsin_pow:
    case CompareExpr::arcsinh_pow: {
        if (k == 0) throw DomainError("compare requires k >= 1");
        if (!(abs(x) < Rational(1)))
            return reject("the power series in x converges only on |x| < 1");
        bool hyp = expr == CompareExpr::arcsinh_pow;
        full = arcsin_pow(k, M + 1, hyp);
        rho = x * x;
        if (x.is_zero()) {
            direct = fix_exact_one(digits);
        } else {
            FixNum a = hyp ? arcsinh_core(x, W) : arcsin_core(x, W);
            FixNum q = fix_div(a, fix_from_rational(x, W));
            direct = fix_rescale(fix_pow_ui(q, k), digits);
        }
        break;
    }
    case CompareExpr::arccos_ratio:
    case CompareExpr::arccosh_ratio: {
        if (k == 0) throw DomainError("compare requires k >= 1");
        bool hyp = expr == CompareExpr::arccosh_ratio;
        if (!(x > Rational(-1) && x <= Rational(1))) {
            if (hyp)
                return reject("outside the |x| < 1 test region; there the hyperbolic ratio "
                              "coincides with the circular one and is checked through it");
            return reject("arccos is real only on [-1, 1] and the expansion needs |x - 1| < 2");
        }
        full = arccos_ratio_pow(k, M + 1, hyp);
        rho = abs(x - Rational(1)) / Rational(2);
        if (x == Rational(1)) {
            direct = fix_exact_one(digits);
        } else {
            FixNum a = arccos_core(x, W);
            Rational inv = inverse(Rational(2) * (Rational(1) - x));
            direct = fix_rescale(fix_pow_ui(fix_mul_rat(fix_mul(a, a), inv), k), digits);
        }
        break;
    }
    case CompareExpr::shifted: {
        if (k == 0) throw DomainError("compare requires k >= 1");
        if (!(x >= Rational(-1) && x < Rational(1)))
            return reject("arccos is real only on [-1, 1] and the expansion needs |x + 1| < 2");
        full = shifted_forms(k, M + 1, ShiftedVariant::pi_minus_arccos);
        rho = abs(x + Rational(1)) / Rational(2);
        if (x == Rational(-1)) {
            direct = fix_exact_one(digits);
        } else {
            FixNum d = fix_sub(pi_at(W), arccos_core(x, W));
            Rational inv = inverse(Rational(2) * (Rational(1) + x));
            direct = fix_rescale(fix_pow_ui(fix_mul_rat(fix_mul(d, d), inv), k), digits);
        }
        break;
    }
    case CompareExpr::alpha_ratio: {
        if (!(x > Rational(-1) && x <= Rational(1)))
            return reject("arccos is real only on [-1, 1] and the expansion needs |x - 1| < 2");
        full = ratio_pow_alpha(alpha, M + 1);
        rho = abs(x - Rational(1)) / Rational(2);
        if (x == Rational(1)) {
            direct = fix_exact_one(digits);
        } else {
            FixNum a = arccos_core(x, W);
            Rational inv = inverse(Rational(2) * (Rational(1) - x));
            FixNum base = fix_mul_rat(fix_mul(a, a), inv);
            direct = fix_rescale(pow_rat_core(base, alpha, W + kGuard), digits);
        }
        break;
    }
    }

    CompareReport rep;
    rep.domain_ok = true;

    unsigned omitted = full.parity == Parity::even_only ? 2 * (M + 1) : M + 1;
    Rational v = variable_at(full.variable, x);
    Rational t1 = abs(full.coeff(omitted)) * pow_rat(abs(v), omitted);
    if (rho >= Rational(1)) return reject("no geometric tail bound at this point");
    rep.tail_bound = t1 / (Rational(1) - rho);

    CoeffSeries trunc = full;
    trunc.coeffs.resize(omitted);
    trunc.truncation_order = omitted - 1;
    rep.series_value = eval_truncated(trunc, x, digits);
    rep.direct_value = direct;
    rep.residual = fix_abs(fix_sub(rep.series_value, rep.direct_value));

    Rational gap = abs(rep.series_value.value() - rep.direct_value.value());
    Rational slack = rep.series_value.error_bound() + rep.direct_value.error_bound();
    rep.pass = gap <= rep.tail_bound + slack;
    return rep;
}

} // namespace qx
