// Acceptance sweep: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qexpand/bell.hpp"
#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"
#include "qexpand/oracle.hpp"
#include "qexpand/pirepr.hpp"
#include "qexpand/prodexpand.hpp"
#include "qexpand/qfunc.hpp"
#include "qexpand/series.hpp"
#include "qexpand/stirling.hpp"

using namespace qx;

namespace {

bool product_routes_agree() {
    StirlingTable table;
    for (unsigned k = 0; k <= 25; ++k)
        for (ProdVariant v : {ProdVariant::consecutive, ProdVariant::odd})
            if (!(prod_squares(k, v) == prod_squares_stirling(table, k, v))) return false;
    return true;
}

bool lemma_identities_hold() { return check_lemma_identities(25).ok; }

bool q_closed_forms_hold() { return check_q_closed_forms(30).ok; }

bool bell_arccos_sweep() {
    StirlingTable table;
    if (bell_arccos(table, 1, 1) != Rational(-1, 6)) return false;
    if (bell_arccos(table, 2, 2) != Rational(1, 36)) return false;
    for (unsigned m = 1; m <= 20; ++m)
        for (unsigned k = 1; k <= m; ++k) bell_arccos(table, m, k);  // throws on mismatch
    return true;
}

bool bell_routes_agree() {
    std::mt19937_64 rng(424242u);
    for (int iter = 0; iter < 200; ++iter) {
        unsigned n = 1 + static_cast<unsigned>(rng() % 18);
        unsigned k = 1 + static_cast<unsigned>(rng() % n);
        BellArgs args;
        for (unsigned i = 0; i < n - k + 1; ++i) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 9);
            args.emplace_back(num, den);
        }
        Rational direct = bell(n, k, args);
        if (direct != bell_rec(n, k, args)) return false;
        if (!bell_genfun_check(n, k, args)) return false;
    }
    return true;
}

bool integer_alpha_collapses() {
    StirlingTable table;
    for (unsigned k = 1; k <= 8; ++k) {
        CoeffSeries a = ratio_pow_alpha(table, Rational(static_cast<long>(k)), 15);
        CoeffSeries r = arccos_ratio_pow(table, k, 15, false);
        for (unsigned n = 0; n <= 15; ++n)
            if (a.coeff(n) != r.coeff(n)) return false;
    }
    return true;
}

bool inner_sum_vanishes_below_diagonal() {
    StirlingTable table;
    for (unsigned k = 2; k <= 12; ++k)
        for (unsigned m = 1; m < k; ++m) {
            Rational sum(0);
            for (unsigned j = 1; j <= k; ++j) {
                Rational t = Rational(factorial(2 * j) * binomial(k, j)) *
                             q_km(table, 2 * j, 2 * m) / Rational(factorial(2 * j + 2 * m));
                sum += (j % 2 ? -t : t);
            }
            if (!sum.is_zero()) return false;
        }
    return true;
}

bool envelope_identity_holds() { return check_envelope_identity(25).ok; }

bool arcsin_square_closed_form() {
    StirlingTable table;
    CoeffSeries s = arcsin_pow(table, 2, 25, false);
    for (unsigned m = 0; m <= 25; ++m) {
        Rational want(double_factorial(2 * static_cast<long>(m)),
                      double_factorial(2 * static_cast<long>(m) + 1) * Integer(m + 1));
        if (s.coeff(2 * m) != want) return false;
    }
    return true;
}

bool oracle_comparisons_pass() {
    const Rational points[] = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(7, 10),
                               Rational(-7, 10)};
    struct Probe {
        CompareExpr expr;
        unsigned k;
        Rational alpha;
    };
    const Probe probes[] = {
        {CompareExpr::arcsin_pow, 2, Rational(0)},  {CompareExpr::arcsinh_pow, 2, Rational(0)},
        {CompareExpr::arccos_ratio, 1, Rational(0)}, {CompareExpr::arccosh_ratio, 1, Rational(0)},
        {CompareExpr::shifted, 1, Rational(0)},      {CompareExpr::alpha_ratio, 1, Rational(1, 2)},
    };
    for (const Probe& p : probes)
        for (const Rational& x : points) {
            CompareReport rep = compare(p.expr, p.k, p.alpha, x, 40, 30);
            if (!rep.domain_ok || !rep.pass) return false;
        }
    return true;
}

bool pi_series_converge() {
    PiTag sq8 = PiTag::parse("sq8", 1, Rational(1));
    FixNum r = residual(sq8, 60, 30);
    if (!(r.value() + r.error_bound() < Rational(Integer(1), pow_ui(10, 10)))) return false;

    const char* classics[] = {"classic-basel", "classic-odd", "classic-alt", "classic-central"};
    for (const char* name : classics) {
        PiTag tag = PiTag::parse(name, 1, Rational(1));
        Rational prev_lo(-1);
        for (unsigned M = 10; M <= 100; M += 10) {
            FixNum res = residual(tag, M, 30);
            Rational hi = res.value() + res.error_bound();
            Rational lo = res.value() - res.error_bound();
            // Once the residual interval straddles zero the series has shrunk
            // below the certified resolution; no further shrink is observable.
            if (lo <= Rational(0)) break;
            if (M > 10 && !(hi < prev_lo)) return false;
            prev_lo = lo;
        }
    }

    LEstimate est = empirical_L(1, 200);
    Rational gap = abs(est.root.value() - Rational(1, 2));
    return gap + est.root.error_bound() <= Rational(1, 20);
}

bool odd_powers_refused() {
    for (unsigned k = 1; k <= 3; ++k) {
        try {
            odd_pow_at_one(k);
            return false;
        } catch (const NotExpandableError&) {
            // expected
        }
    }
    return true;
}

struct Criterion {
    std::string label;
    std::function<bool()> body;
    long budget_ms;  // 0 = untimed
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"product expansions agree along both routes up to 25 factors", product_routes_agree,
         5000},
        {"summation identities behind the expansions hold up to k=25", lemma_identities_hold,
         5000},
        {"closed forms and parity zeros of Q(k,m) hold up to k=30", q_closed_forms_hold, 5000},
        {"arccos-ratio derivative Bell values agree on both routes up to m=20",
         bell_arccos_sweep, 30000},
        {"200 random Bell evaluations agree across partition/recurrence/genfun routes",
         bell_routes_agree, 60000},
        {"integer-exponent series collapse onto the integer-power series",
         integer_alpha_collapses, 0},
        {"inner alternating sum vanishes below the diagonal (m < k <= 12)",
         inner_sum_vanishes_below_diagonal, 0},
        {"alternating double-factorial envelope identity holds up to k=25",
         envelope_identity_holds, 0},
        {"squared-arcsin coefficients match the double-factorial closed form",
         arcsin_square_closed_form, 0},
        {"truncated series match the numeric oracle on all six families",
         oracle_comparisons_pass, 60000},
        {"pi-series residuals shrink and the empirical rate sits near 1/2",
         pi_series_converge, 30000},
        {"odd arccos powers are refused with the dedicated error", odd_powers_refused, 0},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.body();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" [exception: ") + e.what() + "]";
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (ok && c.budget_ms > 0 && elapsed > c.budget_ms) {
            ok = false;
            note = " [exceeded " + std::to_string(c.budget_ms) + " ms budget]";
        }
        std::printf("%s criterion %zu: %s (%ld ms)%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.label.c_str(), static_cast<long>(elapsed), note.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
