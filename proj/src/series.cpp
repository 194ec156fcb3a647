#include "qexpand/series.hpp"

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"
#include "qexpand/qfunc.hpp"

namespace qx {

namespace {
const Rational rational_zero{};

StirlingTable& scratch_table() {
    thread_local StirlingTable table;
    return table;
}
} // namespace

const Rational& CoeffSeries::coeff(unsigned n) const {
    return n < coeffs.size() ? coeffs[n] : rational_zero;
}

CoeffSeries arcsin_pow(StirlingTable& table, unsigned k, unsigned M, bool hyperbolic) {
    if (k == 0) throw DomainError("arcsin_pow requires k >= 1");
    CoeffSeries s;
    s.center = Center::zero;
    s.variable = Variable::x;
    s.parity = Parity::even_only;
    s.truncation_order = 2 * M;
    s.coeffs.assign(2 * M + 1, Rational(0));
    for (unsigned m = 0; m <= M; ++m) {
        Rational c = q_km(table, k, 2 * m) * Rational(pow_ui(2, 2 * m)) /
                     Rational(binomial(k + 2 * m, k) * factorial(2 * m));
        if (!hyperbolic && m % 2) c = -c;
        s.coeffs[2 * m] = c;
    }
    return s;
}

CoeffSeries arcsin_pow(unsigned k, unsigned M, bool hyperbolic) {
    return arcsin_pow(scratch_table(), k, M, hyperbolic);
}

CoeffSeries arccos_ratio_pow(StirlingTable& table, unsigned k, unsigned M, bool hyperbolic) {
    if (k == 0) throw DomainError("arccos_ratio_pow requires k >= 1");
    (void)hyperbolic;  // identical coefficients in (x-1)
    CoeffSeries s;
    s.center = Center::one;
    s.variable = Variable::x_minus_1;
    s.parity = Parity::all;
    s.truncation_order = M;
    s.coeffs.reserve(M + 1);
    for (unsigned n = 0; n <= M; ++n)
        s.coeffs.push_back(Rational(factorial(2 * k) * pow_ui(2, n)) *
                           q_km(table, 2 * k, 2 * n) / Rational(factorial(2 * k + 2 * n)));
    return s;
}

CoeffSeries arccos_ratio_pow(unsigned k, unsigned M, bool hyperbolic) {
    return arccos_ratio_pow(scratch_table(), k, M, hyperbolic);
}

CoeffSeries shifted_forms(StirlingTable& table, unsigned k, unsigned M, ShiftedVariant variant) {
    if (k == 0) throw DomainError("shifted_forms requires k >= 1");
    CoeffSeries s;
    s.center = Center::minus_one;
    s.variable = Variable::x_plus_1;
    s.parity = Parity::all;
    s.truncation_order = M;
    s.global_sign = (variant == ShiftedVariant::pi_plus_i_arccosh && k % 2) ? -1 : 1;
    s.coeffs.reserve(M + 1);
    for (unsigned m = 0; m <= M; ++m) {
        Rational c = Rational(factorial(2 * k) * pow_ui(2, m)) * q_km(table, 2 * k, 2 * m) /
                     Rational(factorial(2 * k + 2 * m));
        if (m % 2) c = -c;
        s.coeffs.push_back(c);
    }
    return s;
}

CoeffSeries shifted_forms(unsigned k, unsigned M, ShiftedVariant variant) {
    return shifted_forms(scratch_table(), k, M, variant);
}

CoeffSeries ratio_pow_alpha(StirlingTable& table, const Rational& alpha, unsigned M) {
    CoeffSeries s;
    s.center = Center::one;
    s.variable = Variable::x_minus_1;
    s.parity = Parity::all;
    s.truncation_order = M;
    s.coeffs.assign(M + 1, Rational(0));
    s.coeffs[0] = Rational(1);

    // Direct double sum per [2(x-1)]^n.
    std::vector<Rational> direct(M + 1, Rational(0));
    direct[0] = Rational(1);
    for (unsigned n = 1; n <= M; ++n) {
        Rational outer(0);
        for (unsigned j = 1; j <= n; ++j) {
            Rational inner(0);
            for (unsigned l = 1; l <= j; ++l) {
                Rational term = Rational(factorial(2 * l) * binomial(j, l)) *
                                q_km(table, 2 * l, 2 * n) / Rational(factorial(2 * l + 2 * n));
                inner += (l % 2 ? -term : term);
            }
            Rational weight = falling(alpha, j) / Rational(factorial(j));
            Rational contrib = weight * inner;
            outer += (j % 2 ? -contrib : contrib);
        }
        direct[n] = outer;
    }

    // Independent route: binomial composition (1+u)^alpha with u the base
    // ratio series, expressed through partial Bell polynomials of u_i * i!.
    std::vector<Rational> au(M + 1, Rational(0));
    for (unsigned n = 1; n <= M; ++n)
        au[n] = Rational(factorial(2)) * q_km(table, 2, 2 * n) * Rational(factorial(n)) /
                Rational(factorial(2 + 2 * n));
    std::vector<std::vector<Rational>> B(M + 1, std::vector<Rational>(M + 1, Rational(0)));
    B[0][0] = Rational(1);
    for (unsigned n = 1; n <= M; ++n)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned i = 1; i + j - 1 <= n; ++i)
                B[n][j] += Rational(binomial(n - 1, i - 1)) * au[i] * B[n - i][j - 1];
    for (unsigned n = 1; n <= M; ++n) {
        Rational total(0);
        for (unsigned j = 1; j <= n; ++j)
            total += binom(alpha, j) * Rational(factorial(j)) * B[n][j] / Rational(factorial(n));
        if (total != direct[n])
            throw InternalInconsistency("alpha-power routes disagree at n=" + std::to_string(n) +
                                        ": " + direct[n].to_string() + " vs " + total.to_string());
    }

    for (unsigned n = 1; n <= M; ++n)
        s.coeffs[n] = direct[n] * Rational(pow_ui(2, n));
    return s;
}

CoeffSeries ratio_pow_alpha(const Rational& alpha, unsigned M) {
    return ratio_pow_alpha(scratch_table(), alpha, M);
}

Rational deriv_at_one(StirlingTable& table, unsigned k, unsigned m, DerivForm form) {
    if (k == 0) throw DomainError("deriv_at_one requires k >= 1");
    Rational base = Rational(factorial(2 * k) * double_factorial(2 * static_cast<long>(m))) *
                    q_km(table, 2 * k, 2 * m) / Rational(factorial(2 * k + 2 * m));
    bool flip = false;
    switch (form) {
    case DerivForm::ratio: flip = false; break;
    case DerivForm::ratio_hyp: flip = k % 2; break;
    case DerivForm::shifted: flip = m % 2; break;
    case DerivForm::shifted_hyp: flip = (k + m) % 2; break;
    }
    return flip ? -base : base;
}

Rational deriv_at_one(unsigned k, unsigned m, DerivForm form) {
    return deriv_at_one(scratch_table(), k, m, form);
}

Rational even_pow_deriv_at1(StirlingTable& table, unsigned k, unsigned n, bool hyperbolic) {
    if (k == 0) throw DomainError("even_pow_deriv_at1 requires k >= 1");
    if (n < k) return Rational(0);
    Rational v;
    if (n == k) {
        v = Rational(double_factorial(2 * static_cast<long>(k)));
    } else {
        v = Rational(factorial(2 * k)) * q_km(table, 2 * k, 2 * (n - k)) /
            Rational(double_factorial(2 * static_cast<long>(n) - 1));
    }
    if (!hyperbolic && k % 2) v = -v;
    return v;
}

Rational even_pow_deriv_at1(unsigned k, unsigned n, bool hyperbolic) {
    return even_pow_deriv_at1(scratch_table(), k, n, hyperbolic);
}

MaclaurinPartial maclaurin_even_pow(StirlingTable& table, unsigned k, unsigned j, unsigned M) {
    if (k == 0) throw DomainError("maclaurin_even_pow requires k >= 1");
    if (M == 0) throw DomainError("maclaurin_even_pow requires M >= 1");
    MaclaurinPartial out;
    std::vector<Rational> terms;  // the summed m-terms, in order
    Rational sum(0);
    if (j <= k) {
        for (unsigned m = 1; m <= M; ++m) {
            Rational t = q_km(table, 2 * k, 2 * m) * Rational(binomial(k + m, j)) /
                         Rational(factorial(k + m) *
                                  double_factorial(2 * static_cast<long>(k) + 2 * m - 1));
            if (m % 2) t = -t;
            terms.push_back(t);
            sum += t;
        }
        Rational value = Rational(pow_ui(2, k) * binomial(k, j)) + Rational(factorial(2 * k)) * sum;
        if (j % 2) value = -value;
        out.value = value;
    } else {
        for (unsigned m = 0; m < M; ++m) {
            Rational t = q_km(table, 2 * k, 2 * j + 2 * m - 2 * k) *
                         Rational(binomial(j + m, j)) /
                         Rational(factorial(j + m) *
                                  double_factorial(2 * static_cast<long>(j) + 2 * m - 1));
            if (m % 2) t = -t;
            terms.push_back(t);
            sum += t;
        }
        Rational value = Rational(factorial(2 * k)) * sum;
        if (k % 2) value = -value;
        out.value = value;
    }

    // Geometric tail estimate from the last two nonzero scaled terms.
    Rational scale = Rational(factorial(2 * k));
    if (terms.size() >= 2) {
        Rational last = abs(terms[terms.size() - 1]) * scale;
        Rational prev = abs(terms[terms.size() - 2]) * scale;
        if (!prev.is_zero() && !last.is_zero()) {
            Rational r = last / prev;
            if (r < Rational(1)) {
                out.tail_bound = last * r / (Rational(1) - r);
                out.tail_valid = true;
            }
        }
    }
    return out;
}

MaclaurinPartial maclaurin_even_pow(unsigned k, unsigned j, unsigned M) {
    return maclaurin_even_pow(scratch_table(), k, j, M);
}

void odd_pow_at_one(unsigned k) {
    if (k == 0) throw DomainError("odd_pow_at_one requires k >= 1");
    unsigned p = 2 * k - 1;
    throw NotExpandableError(
        "(arccos x)^" + std::to_string(p) + " has no Taylor expansion about x = 1: " +
        "derivatives of order below " + std::to_string(k) +
        " vanish there while derivatives of order " + std::to_string(k) +
        " and higher are unbounded as x -> 1");
}

namespace {

Rational variable_value(const CoeffSeries& s, const Rational& x) {
    switch (s.variable) {
    case Variable::x: return x;
    case Variable::x_minus_1: return x - Rational(1);
    case Variable::one_minus_x: return Rational(1) - x;
    case Variable::x_plus_1: return x + Rational(1);
    }
    throw DomainError("unknown series variable");
}

} // namespace

Rational eval_exact(const CoeffSeries& series, const Rational& x) {
    Rational v = variable_value(series, x);
    Rational acc(0);
    for (size_t i = series.coeffs.size(); i-- > 0;)
        acc = acc * v + series.coeffs[i];
    if (series.global_sign < 0) acc = -acc;
    return acc;
}

FixNum eval_truncated(const CoeffSeries& series, const Rational& x, unsigned digits) {
    switch (series.center) {
    case Center::zero:
        if (!(abs(x) < Rational(1)))
            throw DomainError("series centered at 0 requires |x| < 1");
        break;
    case Center::one:
        if (!(abs(x - Rational(1)) < Rational(2)))
            throw DomainError("series centered at 1 requires |x - 1| < 2");
        break;
    case Center::minus_one:
        if (!(abs(x + Rational(1)) < Rational(2)))
            throw DomainError("series centered at -1 requires |x + 1| < 2");
        break;
    }
    return fix_from_rational(eval_exact(series, x), digits);
}

} // namespace qx
