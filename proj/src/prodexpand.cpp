#include "qexpand/prodexpand.hpp"

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"

namespace qx {

const Integer IntPoly::zero_ = 0;

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) {
    IntPoly p;
    p.c_.push_back(c);
    p.trim();
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

unsigned IntPoly::degree() const {
    return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1);
}

const Integer& IntPoly::coeff(unsigned j) const {
    return j < c_.size() ? c_[j] : zero_;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t j = c_.size(); j-- > 0;) {
        const Integer& c = c_[j];
        if (c == 0) continue;
        bool neg = c < 0;
        Integer a = neg ? Integer(-c) : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        bool unit = (a == 1) && j > 0;
        if (!unit) s += a.get_str();
        if (j > 0) {
            if (!unit) s += "*";
            s += "beta";
            if (j > 1) s += "^" + std::to_string(j);
        }
    }
    return s.empty() ? "0" : s;
}

IntPoly prod_squares(unsigned k, ProdVariant variant) {
    IntPoly acc = IntPoly::constant(1);
    for (unsigned l = 1; l <= k; ++l) {
        unsigned long base = variant == ProdVariant::consecutive ? l : 2 * l - 1;
        IntPoly factor(std::vector<Integer>{Integer(base) * Integer(base), Integer(1)});
        acc = acc * factor;
    }
    return acc;
}

IntPoly prod_squares_stirling(StirlingTable& table, unsigned k, ProdVariant variant) {
    std::vector<Integer> out(k + 1, Integer(0));
    if (variant == ProdVariant::consecutive) {
        table.ensure(2 * k + 1);
        for (unsigned j = 0; j <= k; ++j) {
            Integer sum = 0;
            for (unsigned l = 2 * j + 1; l <= 2 * k + 1; ++l)
                sum += binomial(l, 2 * j + 1) * table.s(2 * k + 1, l) *
                       pow_ui(Integer(k), l - 2 * j - 1);
            out[j] = ((k + j) % 2 ? -sum : sum);
        }
    } else {
        table.ensure(2 * k);
        for (unsigned j = 0; j <= k; ++j) {
            Rational sum(0);
            for (unsigned l = 2 * j; l <= 2 * k; ++l) {
                Integer top = binomial(l, 2 * j) * table.s(2 * k, l) *
                              pow_ui(Integer(2 * k) - 1, l - 2 * j);
                sum += Rational(top, pow_ui(2, l));
            }
            Rational val = Rational(((k + j) % 2) ? -1 : 1) * Rational(pow_ui(2, 2 * k)) * sum;
            if (!val.is_integer())
                throw InternalInconsistency("odd-variant coefficient is not integral at k=" +
                                            std::to_string(k) + ", j=" + std::to_string(j) +
                                            ": " + val.to_string());
            out[j] = val.numerator();
        }
    }
    return IntPoly(std::move(out));
}

IntPoly prod_squares_stirling(unsigned k, ProdVariant variant) {
    StirlingTable table;
    return prod_squares_stirling(table, k, variant);
}

LemmaReport check_lemma_identities(unsigned k_max) {
    LemmaReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    StirlingTable table;
    table.ensure(2 * k_max + 1);
    for (unsigned k = 1; k <= k_max; ++k) {
        // (i)
        Integer sum1 = 0;
        for (unsigned l = 0; l <= 2 * k; ++l)
            sum1 += Integer(l + 1) * table.s(2 * k + 1, l + 1) * pow_ui(Integer(k), l);
        Integer kfac = factorial(k);
        Integer want1 = kfac * kfac;
        if (k % 2) want1 = -want1;
        if (sum1 != want1)
            fail("identity (i) fails at k=" + std::to_string(k));

        // (ii)
        for (unsigned j = 0; j + 1 <= k; ++j) {
            Integer sum2 = 0;
            for (unsigned l = 2 * j + 1; l <= 2 * k - 1; ++l)
                sum2 += binomial(l, 2 * j) * table.s(2 * k - 1, l) *
                        pow_ui(Integer(k) - 1, l - 2 * j);
            if (sum2 != -table.s(2 * k - 1, 2 * j))
                fail("identity (ii) fails at k=" + std::to_string(k) + ", j=" + std::to_string(j));
        }

        // (iii)
        for (unsigned j = 0; j < k; ++j) {
            Rational sum3(0);
            Rational half(Integer(2 * k) - 1, Integer(2));
            for (unsigned l = 2 * j + 1; l <= 2 * k; ++l)
                sum3 += Rational(binomial(l, 2 * j + 1) * table.s(2 * k, l)) * pow_rat(half, l);
            if (!sum3.is_zero())
                fail("identity (iii) fails at k=" + std::to_string(k) + ", j=" + std::to_string(j));
        }
    }
    return rep;
}

namespace {

// prod_{l=1..k} (4(l-1)^2 +/- alpha^2) and friends, as exact rationals.
Rational prod_even(unsigned k, const Rational& alpha2, int sgn) {
    Rational acc(1);
    for (unsigned l = 1; l <= k; ++l) {
        Rational sq(Integer(4) * Integer(l - 1) * Integer(l - 1));
        acc *= (sgn > 0 ? sq + alpha2 : sq - alpha2);
    }
    return acc;
}

Rational prod_odd(unsigned k, const Rational& alpha2, int sgn) {
    Rational acc(1);
    for (unsigned l = 1; l <= k; ++l) {
        Rational sq(Integer(2 * l - 1) * Integer(2 * l - 1));
        acc *= (sgn > 0 ? sq + alpha2 : sq - alpha2);
    }
    return acc;
}

Rational prod_shift(unsigned k, const Rational& alpha2, int sgn) {
    Rational acc(1);
    for (unsigned l = 1; l <= k; ++l) {
        Rational sq(Integer(l - 1) * Integer(l - 1));
        acc *= (sgn > 0 ? sq + alpha2 : sq - alpha2);
    }
    return acc;
}

} // namespace

TrigCoeff trig_coeff(TrigTag tag, const Rational& alpha, unsigned n) {
    Rational alpha2 = alpha * alpha;
    TrigCoeff out;
    switch (tag) {
    case TrigTag::cosh_arcsin:
        out.value = prod_even(n, alpha2, +1) / Rational(factorial(2 * n));
        return out;
    case TrigTag::sinh_arcsin:
        out.value = alpha * prod_odd(n, alpha2, +1) / Rational(factorial(2 * n + 1));
        return out;
    case TrigTag::cos_arcsin:
        out.value = prod_even(n, alpha2, -1) / Rational(factorial(2 * n));
        return out;
    case TrigTag::sin_arcsin:
        out.value = alpha * prod_odd(n, alpha2, -1) / Rational(factorial(2 * n + 1));
        return out;
    case TrigTag::cosh_arccos_1:
        out.value = Rational(n % 2 ? -1 : 1) * prod_shift(n, alpha2, +1) /
                    Rational(double_factorial(2 * static_cast<long>(n) - 1) * factorial(n));
        return out;
    case TrigTag::cos_arccos_1:
        out.value = Rational(n % 2 ? -1 : 1) * prod_shift(n, alpha2, -1) /
                    Rational(double_factorial(2 * static_cast<long>(n) - 1) * factorial(n));
        return out;
    case TrigTag::cosh_arccos_0:
    case TrigTag::sinh_arccos_0: {
        bool is_cosh = tag == TrigTag::cosh_arccos_0;
        if (n % 2 == 0) {
            unsigned k = n / 2;
            out.value = prod_even(k, alpha2, +1) / Rational(factorial(2 * k));
            out.prefactor = is_cosh ? TrigPrefactor::cosh_half_pi_alpha
                                    : TrigPrefactor::sinh_half_pi_alpha;
        } else {
            unsigned k = (n - 1) / 2;
            out.value = -alpha * prod_odd(k, alpha2, +1) / Rational(factorial(2 * k + 1));
            out.prefactor = is_cosh ? TrigPrefactor::sinh_half_pi_alpha
                                    : TrigPrefactor::cosh_half_pi_alpha;
        }
        return out;
    }
    case TrigTag::cos_arccos_0:
    case TrigTag::sin_arccos_0: {
        bool is_cos = tag == TrigTag::cos_arccos_0;
        if (n % 2 == 0) {
            unsigned k = n / 2;
            out.value = prod_even(k, alpha2, -1) / Rational(factorial(2 * k));
            out.prefactor = is_cos ? TrigPrefactor::cos_half_pi_alpha
                                   : TrigPrefactor::sin_half_pi_alpha;
        } else {
            unsigned k = (n - 1) / 2;
            Rational body = alpha * prod_odd(k, alpha2, -1) / Rational(factorial(2 * k + 1));
            out.value = is_cos ? body : -body;
            out.prefactor = is_cos ? TrigPrefactor::sin_half_pi_alpha
                                   : TrigPrefactor::cos_half_pi_alpha;
        }
        return out;
    }
    }
    throw DomainError("unknown trig tag");
}

} // namespace qx
