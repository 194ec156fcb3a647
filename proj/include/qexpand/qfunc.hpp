#pragma once

#include <string>
#include <vector>

#include "qexpand/rational.hpp"
#include "qexpand/stirling.hpp"

namespace qx {

// Q(k,m) = sum_{l=0..m} binom(k+l-1, k-1) * s(k+m-1, k+l-1) * ((k+m-2)/2)^l
// with 0^0 = 1. Requires k >= 1; defined for all m >= 0.
Rational q_km(StirlingTable& table, unsigned k, unsigned m);
Rational q_km(unsigned k, unsigned m);

// All Q(k,m) for 1 <= k <= k_max, 0 <= m <= m_max; result[k-1][m].
std::vector<std::vector<Rational>> q_table(unsigned k_max, unsigned m_max);

struct QReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Verifies Q(2,2k) = (-1)^k (k!)^2 and Q(1,2k) = (-1)^k ((2k-1)!!/2^k)^2 for
// k <= k_max, and Q(2j+1, 2m-1) = 0 for all 2j+2m-1 <= 2*k_max+1.
QReport check_q_closed_forms(unsigned k_max);

} // namespace qx
