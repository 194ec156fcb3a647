#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"
#include "qexpand/qfunc.hpp"
#include "qexpand/series.hpp"

using namespace qx;

TEST_CASE("arcsin-power series: coefficients and metadata") {
    StirlingTable t;
    CoeffSeries s1 = arcsin_pow(t, 1, 3, false);
    CHECK(s1.center == Center::zero);
    CHECK(s1.variable == Variable::x);
    CHECK(s1.parity == Parity::even_only);
    CHECK(s1.truncation_order == 6);
    CHECK(s1.global_sign == 1);
    CHECK(s1.coeff(0) == Rational(1));
    CHECK(s1.coeff(2) == Rational(1, 6));
    CHECK(s1.coeff(4) == Rational(3, 40));
    CHECK(s1.coeff(6) == Rational(5, 112));
    CHECK(s1.coeff(1) == Rational(0));
    CHECK(s1.coeff(5) == Rational(0));
    CHECK(s1.coeff(99) == Rational(0));  // beyond truncation

    CoeffSeries s2 = arcsin_pow(t, 2, 2, false);
    CHECK(s2.coeff(2) == Rational(1, 3));
    CHECK(s2.coeff(4) == Rational(8, 45));

    CoeffSeries h1 = arcsin_pow(t, 1, 2, true);
    CHECK(h1.coeff(2) == Rational(-1, 6));
    CHECK(h1.coeff(4) == Rational(3, 40));  // sign flip on odd m only
}

TEST_CASE("ratio series about x = 1") {
    StirlingTable t;
    CoeffSeries r = arccos_ratio_pow(t, 1, 2, false);
    CHECK(r.center == Center::one);
    CHECK(r.variable == Variable::x_minus_1);
    CHECK(r.parity == Parity::all);
    CHECK(r.truncation_order == 2);
    CHECK(r.coeff(0) == Rational(1));
    CHECK(r.coeff(1) == Rational(-1, 6));
    CHECK(r.coeff(2) == Rational(2, 45));

    // Hyperbolic twin has identical coefficients in (x-1).
    CoeffSeries rh = arccos_ratio_pow(t, 1, 2, true);
    CHECK(rh.coeffs == r.coeffs);

    CoeffSeries r3 = arccos_ratio_pow(t, 3, 4, false);
    for (unsigned n = 0; n <= 4; ++n) {
        Rational want = Rational(factorial(6) * pow_ui(2, n)) * q_km(t, 6, 2 * n) /
                        Rational(factorial(6 + 2 * n));
        CHECK(r3.coeff(n) == want);
    }
}

TEST_CASE("shifted series about x = -1 and its hyperbolic sign") {
    StirlingTable t;
    CoeffSeries s = shifted_forms(t, 1, 3, ShiftedVariant::pi_minus_arccos);
    CHECK(s.center == Center::minus_one);
    CHECK(s.variable == Variable::x_plus_1);
    CHECK(s.global_sign == 1);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(1, 6));

    CoeffSeries sh1 = shifted_forms(t, 1, 3, ShiftedVariant::pi_plus_i_arccosh);
    CHECK(sh1.global_sign == -1);
    CHECK(sh1.coeffs == s.coeffs);  // only the global sign differs

    CoeffSeries sh2 = shifted_forms(t, 2, 3, ShiftedVariant::pi_plus_i_arccosh);
    CHECK(sh2.global_sign == 1);

    // Coefficients are the ratio coefficients with alternating sign.
    CoeffSeries r = arccos_ratio_pow(t, 1, 3, false);
    for (unsigned m = 0; m <= 3; ++m) {
        Rational want = r.coeff(m);
        if (m % 2) want = -want;
        CHECK(s.coeff(m) == want);
    }
}

TEST_CASE("rational-exponent series: anchor, collapse, square root") {
    StirlingTable t;
    CoeffSeries half = ratio_pow_alpha(t, Rational(1, 2), 8);
    CHECK(half.coeff(0) == Rational(1));
    CHECK(half.coeff(1) == Rational(-1, 12));

    // Integer exponents collapse onto the integer-power series.
    for (unsigned k = 1; k <= 3; ++k) {
        CoeffSeries a = ratio_pow_alpha(t, Rational(static_cast<long>(k)), 10);
        CoeffSeries r = arccos_ratio_pow(t, k, 10, false);
        CHECK(a.coeffs == r.coeffs);
    }

    // (alpha = 1/2)^2 convolves back to the k = 1 series.
    CoeffSeries one = arccos_ratio_pow(t, 1, 8, false);
    for (unsigned n = 0; n <= 8; ++n) {
        Rational conv(0);
        for (unsigned i = 0; i <= n; ++i) conv += half.coeff(i) * half.coeff(n - i);
        CHECK(conv == one.coeff(n));
    }
}

TEST_CASE("endpoint derivatives of the four ratio/shifted forms") {
    StirlingTable t;
    CHECK(deriv_at_one(t, 1, 1, DerivForm::ratio) == Rational(-1, 6));
    CHECK(deriv_at_one(t, 1, 1, DerivForm::ratio_hyp) == Rational(1, 6));
    CHECK(deriv_at_one(t, 1, 1, DerivForm::shifted) == Rational(1, 6));
    CHECK(deriv_at_one(t, 1, 1, DerivForm::shifted_hyp) == Rational(-1, 6));

    // m-th derivative = m! * series coefficient, for both stored families.
    for (unsigned k = 1; k <= 4; ++k) {
        CoeffSeries r = arccos_ratio_pow(t, k, 6, false);
        CoeffSeries s = shifted_forms(t, k, 6, ShiftedVariant::pi_minus_arccos);
        for (unsigned m = 0; m <= 6; ++m) {
            Rational mfac(factorial(m));
            CHECK(deriv_at_one(t, k, m, DerivForm::ratio) == mfac * r.coeff(m));
            CHECK(deriv_at_one(t, k, m, DerivForm::shifted) == mfac * s.coeff(m));
            Rational flip_k = (k % 2) ? Rational(-1) : Rational(1);
            CHECK(deriv_at_one(t, k, m, DerivForm::ratio_hyp) ==
                  flip_k * deriv_at_one(t, k, m, DerivForm::ratio));
            CHECK(deriv_at_one(t, k, m, DerivForm::shifted_hyp) ==
                  flip_k * deriv_at_one(t, k, m, DerivForm::shifted));
        }
    }
}

TEST_CASE("derivatives of even powers at the right endpoint") {
    StirlingTable t;
    // Orders below k vanish.
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 0; n < k; ++n) {
            CHECK(even_pow_deriv_at1(t, k, n, false) == Rational(0));
            CHECK(even_pow_deriv_at1(t, k, n, true) == Rational(0));
        }

    // Order k: (+-1)^k (2k)!!.
    CHECK(even_pow_deriv_at1(t, 1, 1, false) == Rational(-2));
    CHECK(even_pow_deriv_at1(t, 1, 1, true) == Rational(2));
    CHECK(even_pow_deriv_at1(t, 2, 2, false) == Rational(8));
    CHECK(even_pow_deriv_at1(t, 3, 3, false) == Rational(-48));

    CHECK(even_pow_deriv_at1(t, 1, 2, false) == Rational(2, 3));
    CHECK(even_pow_deriv_at1(t, 1, 2, true) == Rational(-2, 3));

    // Bridge to the ratio series: the n-th derivative equals
    // n! (-1)^k 2^k [(x-1)^(n-k)] of the k-th ratio power.
    for (unsigned k = 1; k <= 3; ++k) {
        CoeffSeries r = arccos_ratio_pow(t, k, 8, false);
        for (unsigned n = k; n <= k + 6; ++n) {
            Rational want = Rational(factorial(n) * pow_ui(2, k)) * r.coeff(n - k);
            if (k % 2) want = -want;
            CHECK(even_pow_deriv_at1(t, k, n, false) == want);
            Rational hyp = want;
            if (k % 2) hyp = -hyp;
            CHECK(even_pow_deriv_at1(t, k, n, true) == hyp);
        }
    }
}

TEST_CASE("Maclaurin coefficients of the squared arccos converge to known values") {
    StirlingTable t;
    const unsigned M = 80;
    // pi^2/4, -pi, 1, -pi/6, 1/3 for j = 0..4; anchors to ~19 places.
    const Rational pi2_4(Integer("24674011002723396547"), pow_ui(10, 19));
    const Rational pi(Integer("31415926535897932385"), pow_ui(10, 19));
    const Rational pi_6(Integer("5235987755982988731"), pow_ui(10, 19));
    const Rational tol(1, pow_ui(10, 18));

    auto near = [&](const MaclaurinPartial& p, const Rational& target) {
        CHECK(p.tail_valid);
        CHECK(p.tail_bound > Rational(0));
        CHECK(p.tail_bound < tol);
        CHECK(abs(p.value - target) < tol);
    };
    near(maclaurin_even_pow(t, 1, 0, M), pi2_4);
    near(maclaurin_even_pow(t, 1, 1, M), -pi);
    near(maclaurin_even_pow(t, 1, 2, M), Rational(1));
    near(maclaurin_even_pow(t, 1, 3, M), -pi_6);
    near(maclaurin_even_pow(t, 1, 4, M), Rational(1, 3));
}

TEST_CASE("odd powers admit no expansion at the right endpoint") {
    for (unsigned k = 1; k <= 3; ++k) {
        CHECK_THROWS_AS(odd_pow_at_one(k), NotExpandableError);
        CHECK_THROWS_AS(odd_pow_at_one(k), DomainError);  // is-a relationship
        try {
            odd_pow_at_one(k);
        } catch (const NotExpandableError& e) {
            CHECK(std::string(e.what()).find("no Taylor expansion") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(odd_pow_at_one(0), DomainError);
}

TEST_CASE("evaluation: Horner, global sign, rounding, domain walls") {
    StirlingTable t;
    CoeffSeries r = arccos_ratio_pow(t, 1, 5, false);
    CHECK(eval_exact(r, Rational(1)) == Rational(1));  // variable vanishes

    // Manual sum against Horner at x = 1/2.
    Rational x(1, 2);
    Rational manual(0);
    for (unsigned n = 0; n <= 5; ++n)
        manual += r.coeff(n) * pow_int(x - Rational(1), static_cast<long>(n));
    CHECK(eval_exact(r, x) == manual);

    // The global sign negates the whole evaluation.
    CoeffSeries sp = shifted_forms(t, 1, 4, ShiftedVariant::pi_minus_arccos);
    CoeffSeries sm = shifted_forms(t, 1, 4, ShiftedVariant::pi_plus_i_arccosh);
    CHECK(eval_exact(sm, Rational(-1, 2)) == -eval_exact(sp, Rational(-1, 2)));

    // eval_truncated = exact evaluation, then one rounding.
    CoeffSeries a = arcsin_pow(t, 2, 4, false);
    FixNum f = eval_truncated(a, Rational(3, 10), 25);
    FixNum g = fix_from_rational(eval_exact(a, Rational(3, 10)), 25);
    CHECK(f.to_string() == g.to_string());
    CHECK(f.err <= 1);

    CHECK_THROWS_AS(eval_truncated(a, Rational(1), 10), DomainError);
    CHECK_THROWS_AS(eval_truncated(a, Rational(-7, 5), 10), DomainError);
    CHECK_THROWS_AS(eval_truncated(r, Rational(3), 10), DomainError);
    CHECK_THROWS_AS(eval_truncated(r, Rational(-1), 10), DomainError);
    CHECK_THROWS_AS(eval_truncated(sp, Rational(1), 10), DomainError);
    CHECK_NOTHROW(eval_truncated(r, Rational(299, 100), 10));
    CHECK_NOTHROW(eval_truncated(sp, Rational(99, 100), 10));
}

TEST_CASE("degenerate-order guards") {
    StirlingTable t;
    CHECK_THROWS_AS(arcsin_pow(t, 0, 3, false), DomainError);
    CHECK_THROWS_AS(arccos_ratio_pow(t, 0, 3, false), DomainError);
    CHECK_THROWS_AS(shifted_forms(t, 0, 3, ShiftedVariant::pi_minus_arccos), DomainError);
    CHECK_THROWS_AS(deriv_at_one(t, 0, 1, DerivForm::ratio), DomainError);
    CHECK_THROWS_AS(even_pow_deriv_at1(t, 0, 1, false), DomainError);
    CHECK_THROWS_AS(maclaurin_even_pow(t, 0, 0, 10), DomainError);
    CHECK_THROWS_AS(maclaurin_even_pow(t, 1, 0, 0), DomainError);
}
