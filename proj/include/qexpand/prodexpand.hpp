#pragma once

#include <string>
#include <vector>

#include "qexpand/rational.hpp"
#include "qexpand/stirling.hpp"

namespace qx {

// Dense polynomial in the formal variable beta (= alpha^2), integer
// coefficients low-to-high, trailing zeros trimmed.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly constant(const Integer& c);

    unsigned degree() const;
    const Integer& coeff(unsigned j) const;  // 0 beyond degree
    const std::vector<Integer>& coeffs() const { return c_; }

    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    std::string to_string() const;  // e.g. "beta^2 + 5*beta + 4"

  private:
    void trim();
    std::vector<Integer> c_;
    static const Integer zero_;
};

enum class ProdVariant { consecutive, odd };

// prod_{l=1..k} (l^2 + beta) or prod_{l=1..k} ((2l-1)^2 + beta),
// expanded by repeated multiplication.
IntPoly prod_squares(unsigned k, ProdVariant variant);

// The same polynomial from the Stirling-number expansion formulas; half-power
// bookkeeping runs in exact rationals and every coefficient must prove
// integral (InternalInconsistency otherwise).
IntPoly prod_squares_stirling(StirlingTable& table, unsigned k, ProdVariant variant);
IntPoly prod_squares_stirling(unsigned k, ProdVariant variant);

struct LemmaReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// For all k <= k_max and admissible j:
//   (i)   sum_{l=0..2k} (l+1) s(2k+1,l+1) k^l = (-1)^k (k!)^2
//   (ii)  sum_{l=2j+1..2k-1} binom(l,2j) s(2k-1,l) (k-1)^(l-2j) = -s(2k-1,2j)
//   (iii) sum_{l=2j+1..2k} binom(l,2j+1) s(2k,l) (k-1/2)^l = 0
LemmaReport check_lemma_identities(unsigned k_max);

// The composed cosh/sinh/cos/sin expansions. The tag fixes the expansion
// point, what n indexes, and the sign inside the product.
enum class TrigTag {
    cosh_arcsin,     // x^{2k}, n = k
    sinh_arcsin,     // x^{2k+1}, n = k
    cosh_arccos_1,   // (x-1)^k, n = k
    cosh_arccos_0,   // x^n
    sinh_arccos_0,   // x^n
    cos_arcsin,      // x^{2k}, n = k
    sin_arcsin,      // x^{2k+1}, n = k
    cos_arccos_1,    // (x-1)^k, n = k
    cos_arccos_0,    // x^n
    sin_arccos_0,    // x^n
};

// Symbolic prefactor carried by the arccos-at-0 expansions; the rational part
// stays exact and numeric evaluation is deferred to the oracle.
enum class TrigPrefactor {
    none,
    cosh_half_pi_alpha,
    sinh_half_pi_alpha,
    cos_half_pi_alpha,
    sin_half_pi_alpha,
};

struct TrigCoeff {
    Rational value;
    TrigPrefactor prefactor = TrigPrefactor::none;
};

TrigCoeff trig_coeff(TrigTag tag, const Rational& alpha, unsigned n);

} // namespace qx
