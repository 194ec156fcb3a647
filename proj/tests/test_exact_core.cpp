#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"
#include "qexpand/fixnum.hpp"
#include "qexpand/rational.hpp"

using namespace qx;

TEST_CASE("rational canonical text form") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("0/9").to_string() == "0");
    CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::from_string(""), DomainError);
    CHECK_THROWS_AS(Rational::from_string("2/3/4"), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(9, 2) == Rational(1, 6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(inverse(Rational(-2, 7)) == Rational(-7, 2));
    CHECK_THROWS_AS(inverse(Rational(0)), DomainError);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
}

TEST_CASE("factorial family") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
    CHECK_THROWS_AS(double_factorial(-2), DomainError);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("rising and falling factorials, rational binomial") {
    CHECK(rising(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(falling(Rational(1, 2), 3) == Rational(3, 8));
    CHECK(rising(Rational(-3), 0) == Rational(1));
    CHECK(falling(Rational(5), 6) == Rational(0));
    CHECK(binom(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binom(Rational(-1), 3) == Rational(-1));
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(binom(Rational(10), n) == Rational(binomial(10, n)));
}

TEST_CASE("powers with integer and rational exponents") {
    CHECK(pow_rat(Rational(0), 0) == Rational(1));
    CHECK(pow_rat(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_int(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(pow_int(Rational(0), -1), DomainError);
    CHECK(pow_ui(Integer(3), 4) == 81);
    CHECK(pow_ui(Integer(10), 0) == 1);
}

TEST_CASE("round_div rounds to nearest, ties away from zero") {
    CHECK(round_div(Integer(7), Integer(2)) == 4);
    CHECK(round_div(Integer(5), Integer(3)) == 2);
    CHECK(round_div(Integer(4), Integer(3)) == 1);
    CHECK(round_div(Integer(-7), Integer(2)) == -4);
    CHECK(round_div(Integer(-5), Integer(3)) == -2);
    CHECK(round_div(Integer(0), Integer(9)) == 0);
    // Negation symmetry: the property the tie rule exists for.
    for (long a : {1L, 2L, 3L, 7L, 9L, 10L, 15L})
        CHECK(round_div(Integer(-a), Integer(4)) == -round_div(Integer(a), Integer(4)));
    CHECK_THROWS_AS(round_div(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_AS(round_div(Integer(1), Integer(-2)), DomainError);
}

TEST_CASE("fixnum construction and certified printing") {
    FixNum third = fix_from_rational(Rational(1, 3), 5);
    CHECK(third.man == 33333);
    CHECK(third.err == 1);
    CHECK(third.value() == Rational(33333, 100000));

    FixNum quarter = fix_from_rational(Rational(1, 4), 2);
    CHECK(quarter.man == 25);
    CHECK(quarter.err == 0);
    CHECK(quarter.to_string() == "0.25");

    FixNum pi_approx = fix_from_rational(Rational(355, 113), 10);
    CHECK(pi_approx.to_string() == "3.1415929204");

    FixNum negative = fix_from_rational(Rational(-355, 113), 10);
    CHECK(negative.to_string() == "-3.1415929204");
}

TEST_CASE("fixnum arithmetic stays within its own error bound") {
    // every operation must certify: |stored - exact| <= err ulp
    Rational a(355, 113), b(-113, 355);
    FixNum fa = fix_from_rational(a, 25);
    FixNum fb = fix_from_rational(b, 25);

    FixNum sum = fix_add(fa, fb);
    CHECK(abs(sum.value() - (a + b)) <= sum.error_bound());

    FixNum prod = fix_mul(fa, fb);
    CHECK(abs(prod.value() - (a * b)) <= prod.error_bound());

    FixNum scaled = fix_mul_rat(fa, Rational(22, 7));
    CHECK(abs(scaled.value() - a * Rational(22, 7)) <= scaled.error_bound());

    FixNum quot = fix_div(fa, fb);
    CHECK(abs(quot.value() - a / b) <= quot.error_bound());

    FixNum cube = fix_pow_ui(fa, 3);
    CHECK(abs(cube.value() - a * a * a) <= cube.error_bound());

    FixNum down = fix_rescale(fa, 10);
    CHECK(abs(down.value() - a) <= down.error_bound());
}

TEST_CASE("fixnum square root") {
    FixNum two = fix_from_rational(Rational(2), 30);
    FixNum root = fix_sqrt(two);
    CHECK(root.to_string() == "1.41421356237309504880168872421");
    CHECK(root.err <= 2);

    // residual check: root^2 within combined bounds of 2
    FixNum sq = fix_mul(root, root);
    CHECK(fix_close(sq, two, Rational(1, pow_ui(10, 25))));

    FixNum zero = fix_from_rational(Rational(0), 20);
    CHECK(fix_sqrt(zero).man == 0);

    FixNum tiny;  // certified only as |x| < 4e-20: sqrt must not pretend more
    tiny.man = 2;
    tiny.scale = 20;
    tiny.err = 2;
    FixNum r = fix_sqrt(tiny);
    CHECK(r.man == 0);
    CHECK(r.err > 0);

    FixNum neg = fix_from_rational(Rational(-1, 4), 20);
    CHECK_THROWS_AS(fix_sqrt(neg), DomainError);
}

TEST_CASE("fixnum division needs a divisor certified away from zero") {
    FixNum one = fix_from_rational(Rational(1), 10);
    FixNum foggy;
    foggy.man = 1;
    foggy.scale = 10;
    foggy.err = 2;
    CHECK_THROWS_AS(fix_div(one, foggy), PrecisionError);
}

TEST_CASE("fix_close accounts for both error bounds") {
    FixNum a = fix_from_rational(Rational(1, 3), 20);
    FixNum b = fix_from_rational(Rational(1, 3), 25);
    CHECK(fix_close(a, b, Rational(1, pow_ui(10, 15))));
    CHECK(!fix_close(a, fix_from_rational(Rational(1, 2), 25), Rational(1, 1000)));
}
