#include "qexpand/qfunc.hpp"

#include "qexpand/factorials.hpp"

namespace qx {

Rational q_km(StirlingTable& table, unsigned k, unsigned m) {
    if (k == 0) throw DomainError("Q(k,m) requires k >= 1");
    Rational base(Integer(k) + Integer(m) - 2, Integer(2));
    Rational sum(0);
    for (unsigned l = 0; l <= m; ++l) {
        Integer b = binomial(k + l - 1, k - 1);
        const Integer& st = table.s(k + m - 1, k + l - 1);
        sum += Rational(b * st) * pow_rat(base, l);
    }
    return sum;
}

Rational q_km(unsigned k, unsigned m) {
    static thread_local StirlingTable table;
    return q_km(table, k, m);
}

std::vector<std::vector<Rational>> q_table(unsigned k_max, unsigned m_max) {
    if (k_max == 0) throw DomainError("q_table requires k_max >= 1");
    StirlingTable table;
    table.ensure(k_max + m_max);
    std::vector<std::vector<Rational>> out(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        out[k - 1].reserve(m_max + 1);
        for (unsigned m = 0; m <= m_max; ++m)
            out[k - 1].push_back(q_km(table, k, m));
    }
    return out;
}

QReport check_q_closed_forms(unsigned k_max) {
    QReport rep;
    StirlingTable table;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    for (unsigned k = 1; k <= k_max; ++k) {
        Rational q2 = q_km(table, 2, 2 * k);
        Integer kfac = factorial(k);
        Rational want2 = Rational(k % 2 ? -1 : 1) * Rational(kfac * kfac);
        if (q2 != want2)
            fail("Q(2," + std::to_string(2 * k) + ") = " + q2.to_string() +
                 ", expected " + want2.to_string());

        Rational q1 = q_km(table, 1, 2 * k);
        Rational half(double_factorial(2 * static_cast<long>(k) - 1), pow_ui(2, k));
        Rational want1 = Rational(k % 2 ? -1 : 1) * half * half;
        if (q1 != want1)
            fail("Q(1," + std::to_string(2 * k) + ") = " + q1.to_string() +
                 ", expected " + want1.to_string());
    }

    // Q(2j+1, 2m-1) = 0 whenever 2j+2m-1 <= 2*k_max+1.
    for (unsigned j = 0; 2 * j + 1 <= 2 * k_max + 1; ++j) {
        for (unsigned m = 1; 2 * j + 2 * m - 1 <= 2 * k_max + 1; ++m) {
            Rational v = q_km(table, 2 * j + 1, 2 * m - 1);
            if (!v.is_zero())
                fail("Q(" + std::to_string(2 * j + 1) + "," + std::to_string(2 * m - 1) +
                     ") = " + v.to_string() + ", expected 0");
        }
    }
    return rep;
}

} // namespace qx
