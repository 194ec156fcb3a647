#pragma once

#include <vector>

#include "qexpand/rational.hpp"

namespace qx {

// Triangular cache of signed Stirling numbers of the first kind.
// Rows satisfy s(n+1,k) = s(n,k-1) - n*s(n,k) with s(0,0) = 1.
class StirlingTable {
  public:
    StirlingTable();

    // s(n,k); grows the table to row n on demand. Domain error if k > n.
    const Integer& s(unsigned n, unsigned k);

    void ensure(unsigned n);
    unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }

  private:
    std::vector<std::vector<Integer>> rows_;
};

// Point query through a shared, mutex-guarded table.
Integer stirling1(unsigned n, unsigned k);

// Independent route: n! times the x^n coefficient of [ln(1+x)]^k / k!,
// by exact truncated-series powering. Must agree with stirling1.
Integer stirling_oracle(unsigned n, unsigned k);

// Checks n! * binom(z,n) == sum_{k=0..n} s(n,k) z^k.
bool check_binom_identity(unsigned n, const Rational& z);

} // namespace qx
