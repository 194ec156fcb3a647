#pragma once

#include <string>
#include <vector>

#include "qexpand/rational.hpp"
#include "qexpand/stirling.hpp"

namespace qx {

using BellArgs = std::vector<Rational>;

// Partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}) by direct enumeration of
// partition multi-indices l_i >= 0 with sum l_i = k, sum i*l_i = n.
// Requires 1 <= k <= n and at least n-k+1 argument values.
Rational bell(unsigned n, unsigned k, const BellArgs& args);

// Same value via the convolution recurrence
// B_{n,k} = sum_i binom(n-1, i-1) x_i B_{n-i,k-1}.
Rational bell_rec(unsigned n, unsigned k, const BellArgs& args);

// True iff n! * [t^n] (sum_{m<=n} x_m t^m/m!)^k / k! equals bell(n,k,args).
bool bell_genfun_check(unsigned n, unsigned k, const BellArgs& args);

struct BellReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Verifies, for the given (n,k,alpha,beta):
//   (i)   scaling: B_{n,k}(ab x_1, ab^2 x_2, ...) = a^k b^n B_{n,k}(x)
//   (ii)  B_{n,k}(a,1,0,...,0) = (n-k)!/2^{n-k} binom(n,k) binom(k,n-k) a^{2k-n}
//         (skipped when 2k-n < 0 and a = 0)
//   (iii) B_{n,k}((-1)!!,1!!,3!!,...) = [2(n-k)-1]!! binom(2n-k-1, 2(n-k))
BellReport check_special_values(unsigned n, unsigned k, const Rational& alpha,
                                const Rational& beta);

// sum_{k=0..n} outer[k] * B_{n,k}(inner[0..n-k]); outer holds f^(0)..f^(n)
// at h(t0) (n+1 entries), inner holds h^(1)..h^(n) (n entries).
Rational faa_di_bruno(unsigned n, const std::vector<Rational>& outer_derivs,
                      const std::vector<Rational>& inner_derivs);

// B_{m,k} at the derivative sequence of (arccos x)^2/(2(1-x)) at x -> 1-,
// computed by both displayed routes:
//   (a) 2^k B_{m,k}(t) with t_i = (2i)!!/(2i+2)! * Q(2,2i)
//   (b) (-2)^k [2(m-k)]!! binom(m,k)
//         * sum_{j=1..k} (-1)^j (2j)! binom(k,j) Q(2j,2m)/(2j+2m)!
// Raises InternalInconsistency if the routes disagree.
Rational bell_arccos(StirlingTable& table, unsigned m, unsigned k);
Rational bell_arccos(unsigned m, unsigned k);

// sum_{j=0..k} (-1)^j <2k>_j [2(k-j)-1]!! binom(2k-j-1, 2(k-j))
// == (-1)^k (2k)!! for each k in [1, k_max].
BellReport check_envelope_identity(unsigned k_max);

// Companion identity:
// sum_{k=0..n} k! [2(n-k)-1]!! binom(2n-k-1, 2(n-k)) == (2n-1)!!.
BellReport check_companion_identity(unsigned n_max);

} // namespace qx
