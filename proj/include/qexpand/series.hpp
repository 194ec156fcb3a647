#pragma once

#include <string>
#include <vector>

#include "qexpand/fixnum.hpp"
#include "qexpand/rational.hpp"
#include "qexpand/stirling.hpp"

namespace qx {

enum class Center { zero, one, minus_one };
enum class Variable { x, x_minus_1, one_minus_x, x_plus_1 };
enum class Parity { even_only, all };

// One truncated expansion: coeffs[n] is the coefficient of variable^n.
// Center-one series are stored in the signed variable (x-1) with the 2^n
// normalization factors absorbed; center minus-one series use (x+1).
struct CoeffSeries {
    Center center = Center::zero;
    Variable variable = Variable::x;
    Parity parity = Parity::all;
    std::vector<Rational> coeffs;
    unsigned truncation_order = 0;
    int global_sign = 1;  // (-1)^k factor of the pi+i*arccosh shifted variant

    const Rational& coeff(unsigned n) const;
};

// (arcsin x / x)^k (hyperbolic: arcsinh) up to x^(2M):
// [x^(2m)] = (+-1)^m Q(k,2m) 2^(2m) / (binom(k+2m,k) (2m)!), constant 1.
CoeffSeries arcsin_pow(StirlingTable& table, unsigned k, unsigned M, bool hyperbolic);
CoeffSeries arcsin_pow(unsigned k, unsigned M, bool hyperbolic);

// [(arccos x)^2 / (2(1-x))]^k up to (x-1)^M:
// [(x-1)^n] = (2k)! Q(2k,2n) 2^n / (2k+2n)!, constant 1. The arccosh form
// has identical coefficients in (x-1).
CoeffSeries arccos_ratio_pow(StirlingTable& table, unsigned k, unsigned M, bool hyperbolic);
CoeffSeries arccos_ratio_pow(unsigned k, unsigned M, bool hyperbolic);

enum class ShiftedVariant { pi_minus_arccos, pi_plus_i_arccosh };

// [(pi - arccos x)^2 / (2(1+x))]^k in (x+1):
// [(x+1)^m] = (-1)^m (2k)! Q(2k,2m) 2^m / (2k+2m)!; the second variant
// carries a global (-1)^k recorded in global_sign.
CoeffSeries shifted_forms(StirlingTable& table, unsigned k, unsigned M, ShiftedVariant variant);
CoeffSeries shifted_forms(unsigned k, unsigned M, ShiftedVariant variant);

// [(arccos x)^2 / (2(1-x))]^alpha for rational alpha, coefficients stored in
// (x-1) (the display's [2(x-1)]^n coefficient times 2^n):
// per [2(x-1)]^n: sum_{j=1..n} (-1)^j <alpha>_j / j!
//   * sum_{l=1..j} (-1)^l (2l)! binom(j,l) Q(2l,2n)/(2l+2n)!.
// Cross-checked against the Faa di Bruno route through bell_arccos;
// InternalInconsistency on disagreement.
CoeffSeries ratio_pow_alpha(StirlingTable& table, const Rational& alpha, unsigned M);
CoeffSeries ratio_pow_alpha(const Rational& alpha, unsigned M);

enum class DerivForm { ratio, ratio_hyp, shifted, shifted_hyp };

// m-th one-sided derivative at the expansion endpoint:
// sign * (2k)!(2m)!! Q(2k,2m) / (2k+2m)! with sign 1, (-1)^k, (-1)^m,
// (-1)^(k+m) per form.
Rational deriv_at_one(StirlingTable& table, unsigned k, unsigned m, DerivForm form);
Rational deriv_at_one(unsigned k, unsigned m, DerivForm form);

// n-th derivative of (arccos x)^{2k} (hyperbolic: arccosh) at x -> 1-:
// 0 for n<k; (+-1)^k (2k)!! at n=k; (+-1)^k (2k)! Q(2k,2n-2k)/(2n-1)!! for n>k.
Rational even_pow_deriv_at1(StirlingTable& table, unsigned k, unsigned n, bool hyperbolic);
Rational even_pow_deriv_at1(unsigned k, unsigned n, bool hyperbolic);

struct MaclaurinPartial {
    Rational value;       // partial sum of the x^j coefficient
    Rational tail_bound;  // last term * r/(1-r), r = last two-term ratio
    bool tail_valid = false;  // false when r >= 1 or not enough terms
};

// Coefficient of x^j in the Maclaurin expansion of (arccos x)^{2k}, inner
// m-sum truncated to M terms. The only approximating operation.
MaclaurinPartial maclaurin_even_pow(StirlingTable& table, unsigned k, unsigned j, unsigned M);
MaclaurinPartial maclaurin_even_pow(unsigned k, unsigned j, unsigned M);

// Odd powers of arccos/arccosh have no Taylor expansion at 1: derivatives of
// order below k vanish and those of order >= k diverge. Always throws
// NotExpandableError.
[[noreturn]] void odd_pow_at_one(unsigned k);

// Exact Horner evaluation of the partial sum, rounded once to `digits`.
// Domain: |x|<1 (center zero), |x-1|<2 (center one), |x+1|<2 (center -1).
FixNum eval_truncated(const CoeffSeries& series, const Rational& x, unsigned digits);

// Exact value of the partial sum at x (no rounding).
Rational eval_exact(const CoeffSeries& series, const Rational& x);

} // namespace qx
