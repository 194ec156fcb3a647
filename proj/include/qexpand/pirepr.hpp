#pragma once

#include <string>
#include <vector>

#include "qexpand/fixnum.hpp"
#include "qexpand/rational.hpp"

namespace qx {

// Tagged pi-series: each tag binds a term formula and a target constant.
struct PiTag {
    enum Kind {
        pow8,            // (pi^2/8)^k = 1 + (2k)! sum (-1)^m 2^m Q(2k,2m)/(2k+2m)!
        sq8,             // pi^2/8 = sum 2^m / (m^2 binom(2m,m))
        sqrt2pow,        // (pi/(2 sqrt 2))^k = 1 + k! sum (-1)^m 2^m Q(k,2m)/(k+2m)!
        alpha9,          // (pi^2/9)^alpha, the x=1/2 specialization
        classic_basel,   // pi^2/6 = sum_{m>=1} 1/m^2
        classic_odd,     // pi^2/8 = sum_{m>=1} 1/(2m-1)^2
        classic_alt,     // pi^2/12 = sum_{m>=1} (-1)^(m-1)/m^2
        classic_central, // pi^2/18 = sum_{m>=1} 1/(m^2 binom(2m,m))
    };
    Kind kind = sq8;
    unsigned k = 1;           // pow8 / sqrt2pow
    Rational alpha = Rational(1);  // alpha9

    static PiTag parse(const std::string& repr, unsigned k, const Rational& alpha);
    std::string name() const;
};

// Exact rational partial sum through M terms.
Rational partial_sum(const PiTag& tag, unsigned M);

// 1 + sum_{n=1..M} (-1)^n [inner double sum of the real-power expansion].
Rational alpha9_partial(const Rational& alpha, unsigned M);

// |partial_sum - target| with the target from the numeric oracle.
FixNum residual(const PiTag& tag, unsigned M, unsigned digits);

// Oracle value of the tag's target constant.
FixNum target_value(const PiTag& tag, unsigned digits);

struct LEstimate {
    FixNum root;                  // |term(M)|^(1/M)
    std::vector<FixNum> ratios;   // |term(m)/term(m-1)|, m = 2..M
};

// Convergence-rate diagnostics for the pow8(k) term sequence
// a_m = (2k)! 2^m Q(2k,2m)/(2k+2m)!; reports the M-th-root estimate and the
// ratio sequence. M >= 10.
LEstimate empirical_L(unsigned k, unsigned M, unsigned digits = 30);

// M-th-root estimate |term(M)|^(1/M) for any tag's term sequence.
FixNum root_estimate(const PiTag& tag, unsigned M, unsigned digits = 30);

} // namespace qx
