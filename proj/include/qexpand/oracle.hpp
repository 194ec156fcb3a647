#pragma once

#include <string>

#include "qexpand/fixnum.hpp"
#include "qexpand/rational.hpp"
#include "qexpand/series.hpp"

namespace qx {

// Configured precision ceiling (decimal digits) for every oracle entry point.
// Overridable through the QEXPAND_ORACLE_MAX_DIGITS environment variable.
unsigned oracle_max_digits();

// pi by Machin's formula, err <= 2 ulp at the requested scale. digits >= 10.
FixNum pi_ref(unsigned digits);

FixNum sqrt_fp(const Rational& x, unsigned digits);
FixNum arcsin_fp(const Rational& x, unsigned digits);   // |x| <= 1
FixNum arccos_fp(const Rational& x, unsigned digits);   // |x| <= 1
FixNum arccosh_fp(const Rational& x, unsigned digits);  // x >= 1
FixNum arcsinh_fp(const Rational& x, unsigned digits);
FixNum ln_fp(const Rational& x, unsigned digits);       // x > 0

// FixNum-argument cores used for composed evaluations.
FixNum fix_ln(const FixNum& x, unsigned digits);
FixNum fix_exp(const FixNum& x, unsigned digits);

// v^(p/q) for v > 0 via exp((p/q) ln v).
FixNum fix_pow_rat(const FixNum& v, const Rational& pq, unsigned digits);

// Families accepted by compare(); alpha-ratio uses the rational exponent.
enum class CompareExpr {
    arcsin_pow,
    arcsinh_pow,
    arccos_ratio,
    arccosh_ratio,
    shifted,
    alpha_ratio,
};

struct CompareReport {
    bool domain_ok = false;  // false: x outside the tested region, note set
    std::string note;
    FixNum series_value;
    FixNum direct_value;
    FixNum residual;
    Rational tail_bound;  // first omitted term / (1 - limit ratio)
    bool pass = false;
};

// |truncated series - direct oracle composition| at x, M terms, `digits`
// precision; passes when the residual is within tail bound + certified error.
CompareReport compare(CompareExpr expr, unsigned k, const Rational& alpha,
                      const Rational& x, unsigned M, unsigned digits);

} // namespace qx
