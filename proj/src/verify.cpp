#include "qexpand/verify.hpp"

#include <algorithm>
#include <random>

#include "qexpand/bell.hpp"
#include "qexpand/errors.hpp"
#include "qexpand/factorials.hpp"
#include "qexpand/oracle.hpp"
#include "qexpand/pirepr.hpp"
#include "qexpand/prodexpand.hpp"
#include "qexpand/qfunc.hpp"
#include "qexpand/series.hpp"
#include "qexpand/stirling.hpp"

namespace qx {

namespace {

struct Collector {
    std::vector<VerifyCase>& cases;

    void add(std::string name, bool pass, std::string detail = "") {
        cases.push_back({std::move(name), pass, std::move(detail)});
    }

    // Runs body() which returns an empty string on success or a counterexample.
    template <typename F>
    void run(std::string name, F&& body) {
        try {
            std::string detail = body();
            add(std::move(name), detail.empty(), std::move(detail));
        } catch (const std::exception& e) {
            add(std::move(name), false, std::string("unexpected error: ") + e.what());
        }
    }
};

Rational random_rational(std::mt19937_64& rng, long span = 9) {
    long num = static_cast<long>(rng() % (2 * span + 1)) - span;
    long den = 1 + static_cast<long>(rng() % span);
    return Rational(num, den);
}

std::string at(unsigned n, unsigned k) {
    return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
}

void suite_stirling(Collector& c, unsigned N, std::uint64_t seed) {
    c.run("stirling.binom-identity", [&] {
        std::mt19937_64 rng(seed ^ 0x5ad1u);
        for (unsigned n = 0; n <= N; ++n)
            for (int rep = 0; rep < 2; ++rep) {
                Rational z = random_rational(rng);
                if (!check_binom_identity(n, z))
                    return "n=" + std::to_string(n) + ", z=" + z.to_string();
            }
        return std::string();
    });
    c.run("stirling.oracle-agreement", [&] {
        StirlingTable table;
        for (unsigned n = 0; n <= N; ++n)
            for (unsigned k = 0; k <= n; ++k)
                if (table.s(n, k) != stirling_oracle(n, k)) return at(n, k);
        return std::string();
    });
    c.run("stirling.row-sums", [&] {
        StirlingTable table;
        for (unsigned n = 0; n <= N; ++n) {
            Integer sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += table.s(n, k);
            Integer want = n <= 1 ? 1 : 0;
            if (sum != want) return "n=" + std::to_string(n);
        }
        return std::string();
    });
    c.run("stirling.sign-pattern", [&] {
        StirlingTable table;
        for (unsigned n = 1; n <= N; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                const Integer& v = table.s(n, k);
                bool want_neg = (n - k) % 2 == 1;
                if (v == 0 || (v < 0) != want_neg) return at(n, k);
            }
        return std::string();
    });
}

void suite_q(Collector& c, unsigned N, std::uint64_t seed) {
    c.run("q.closed-forms", [&] {
        QReport rep = check_q_closed_forms(N);
        return rep.ok ? std::string() : rep.violations.front();
    });
    c.run("q.spot-values", [&] {
        if (q_km(2, 2) != Rational(-1)) return std::string("Q(2,2)");
        if (q_km(1, 2) != Rational(-1, 4)) return std::string("Q(1,2)");
        if (q_km(3, 3) != Rational(0)) return std::string("Q(3,3)");
        if (q_km(4, 4) != Rational(49)) return std::string("Q(4,4)");
        if (q_km(2, 4) != Rational(4)) return std::string("Q(2,4)");
        return std::string();
    });
    c.run("q.table-consistency", [&] {
        std::mt19937_64 rng(seed ^ 0x9f00u);
        unsigned kmax = std::max(2u, std::min(N, 12u));
        unsigned mmax = std::min(2 * N, 24u);
        auto table = q_table(kmax, mmax);
        for (int rep = 0; rep < 40; ++rep) {
            unsigned k = 1 + rng() % kmax;
            unsigned m = rng() % (mmax + 1);
            if (table[k - 1][m] != q_km(k, m))
                return "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
        }
        return std::string();
    });
}

void suite_bell(Collector& c, unsigned N, std::uint64_t seed) {
    c.run("bell.three-way-agreement", [&] {
        std::mt19937_64 rng(seed ^ 0xbe11u);
        unsigned cap = std::min(N, 26u);
        for (int rep = 0; rep < 200; ++rep) {
            unsigned n = 1 + rng() % cap;
            unsigned k = 1 + rng() % n;
            BellArgs args;
            for (unsigned i = 0; i < n - k + 1; ++i) args.push_back(random_rational(rng));
            Rational direct = bell(n, k, args);
            Rational rec = bell_rec(n, k, args);
            if (direct != rec)
                return "partition vs recurrence at " + at(n, k);
            if (!bell_genfun_check(n, k, args))
                return "generating-function mismatch at " + at(n, k);
        }
        return std::string();
    });
    c.run("bell.special-values", [&] {
        std::mt19937_64 rng(seed ^ 0x5becu);
        unsigned cap = std::min(N, 16u);
        for (unsigned n = 1; n <= cap; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                Rational alpha = random_rational(rng);
                Rational beta = random_rational(rng);
                BellReport rep = check_special_values(n, k, alpha, beta);
                if (!rep.ok) return rep.violations.front();
            }
        return std::string();
    });
    c.run("bell.arccos-values", [&] {
        StirlingTable table;
        unsigned cap = std::min(N, 20u);
        for (unsigned m = 1; m <= cap; ++m)
            for (unsigned k = 1; k <= m; ++k)
                bell_arccos(table, m, k);  // throws InternalInconsistency on mismatch
        if (bell_arccos(table, 1, 1) != Rational(-1, 6)) return std::string("(m=1,k=1)");
        if (bell_arccos(table, 2, 2) != Rational(1, 36)) return std::string("(m=2,k=2)");
        return std::string();
    });
    c.run("bell.envelope-identity", [&] {
        BellReport rep = check_envelope_identity(N);
        return rep.ok ? std::string() : rep.violations.front();
    });
    c.run("bell.companion-identity", [&] {
        BellReport rep = check_companion_identity(N);
        return rep.ok ? std::string() : rep.violations.front();
    });
    c.run("bell.faa-di-bruno-involutions", [&] {
        // exp(t + t^2/2) generates the involution counts.
        static const long inv[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
        for (unsigned n = 0; n <= 8; ++n) {
            std::vector<Rational> outer(n + 1, Rational(1));  // e^u derivatives at 0
            std::vector<Rational> inner(std::max(n, 1u), Rational(0));
            inner[0] = Rational(1);
            if (n >= 2) inner[1] = Rational(1);
            Rational got = faa_di_bruno(n, outer, inner);
            if (got != Rational(inv[n])) return "n=" + std::to_string(n);
        }
        return std::string();
    });
}

void suite_products(Collector& c, unsigned N, std::uint64_t) {
    c.run("products.expansion-equality", [&] {
        StirlingTable table;
        for (unsigned k = 0; k <= N; ++k)
            for (ProdVariant v : {ProdVariant::consecutive, ProdVariant::odd}) {
                IntPoly direct = prod_squares(k, v);
                IntPoly via = prod_squares_stirling(table, k, v);
                if (!(direct == via))
                    return "k=" + std::to_string(k) +
                           (v == ProdVariant::consecutive ? " consecutive" : " odd") + ": " +
                           direct.to_string() + " vs " + via.to_string();
            }
        return std::string();
    });
    c.run("products.lemma-identities", [&] {
        LemmaReport rep = check_lemma_identities(N);
        return rep.ok ? std::string() : rep.violations.front();
    });
    c.run("products.spot-polynomials", [&] {
        if (prod_squares(2, ProdVariant::consecutive) !=
            IntPoly({Integer(4), Integer(5), Integer(1)}))
            return std::string("consecutive k=2");
        if (prod_squares(2, ProdVariant::odd) != IntPoly({Integer(9), Integer(10), Integer(1)}))
            return std::string("odd k=2");
        return std::string();
    });
    c.run("products.trig-even-odd-split", [&] {
        // cos(a arccos x) at a=1 must reduce to x after the half-pi
        // prefactors cos(pi/2)=0, sin(pi/2)=1 are applied.
        for (unsigned n = 0; n <= 10; ++n) {
            TrigCoeff tc = trig_coeff(TrigTag::cos_arccos_0, Rational(1), n);
            Rational effective = tc.prefactor == TrigPrefactor::sin_half_pi_alpha
                                     ? tc.value
                                     : Rational(0);
            Rational want = n == 1 ? Rational(1) : Rational(0);
            if (effective != want) return "n=" + std::to_string(n);
        }
        return std::string();
    });
    c.run("products.trig-spot-values", [&] {
        if (trig_coeff(TrigTag::cosh_arcsin, Rational(1), 2).value != Rational(5, 24))
            return std::string("cosh-arcsin alpha=1 k=2");
        if (trig_coeff(TrigTag::sin_arcsin, Rational(2), 1).value != Rational(-1))
            return std::string("sin-arcsin alpha=2 k=1");
        for (unsigned k = 2; k <= 6; ++k) {
            if (trig_coeff(TrigTag::sin_arcsin, Rational(3), k).value != Rational(0))
                return std::string("sin-arcsin alpha=3 truncation");
            if (trig_coeff(TrigTag::cos_arcsin, Rational(2), k).value != Rational(0))
                return std::string("cos-arcsin alpha=2 truncation");
        }
        if (trig_coeff(TrigTag::cosh_arccos_1, Rational(1), 1).value != Rational(-1))
            return std::string("cosh-arccos-at-1 alpha=1 k=1");
        if (trig_coeff(TrigTag::cos_arccos_1, Rational(1), 1).value != Rational(1))
            return std::string("cos-arccos-at-1 alpha=1 k=1");
        return std::string();
    });
}

void suite_series(Collector& c, unsigned N, std::uint64_t seed) {
    c.run("series.cor53-collapse", [&] {
        StirlingTable table;
        unsigned kcap = std::min(N, 8u);
        for (unsigned k = 1; k <= kcap; ++k) {
            CoeffSeries integral = arccos_ratio_pow(table, k, 15, false);
            CoeffSeries realpow = ratio_pow_alpha(table, Rational(static_cast<long>(k)), 15);
            for (unsigned n = 0; n <= 15; ++n)
                if (integral.coeff(n) != realpow.coeff(n))
                    return "k=" + std::to_string(k) + ", n=" + std::to_string(n);
        }
        return std::string();
    });
    c.run("series.proof-identity-zero-sum", [&] {
        StirlingTable table;
        unsigned kcap = std::min(N, 12u);
        for (unsigned k = 2; k <= kcap; ++k)
            for (unsigned m = 1; m < k; ++m) {
                Rational sum(0);
                for (unsigned j = 1; j <= k; ++j) {
                    Rational t = Rational(factorial(2 * j) * binomial(k, j)) *
                                 q_km(table, 2 * j, 2 * m) / Rational(factorial(2 * j + 2 * m));
                    sum += (j % 2 ? -t : t);
                }
                if (!sum.is_zero()) return "k=" + std::to_string(k) + ", m=" + std::to_string(m);
            }
        return std::string();
    });
    c.run("series.arcsin-square-closed-form", [&] {
        StirlingTable table;
        CoeffSeries s = arcsin_pow(table, 2, N, false);
        for (unsigned m = 0; m <= N; ++m) {
            Rational want(double_factorial(2 * static_cast<long>(m)),
                          double_factorial(2 * static_cast<long>(m) + 1) * Integer(m + 1));
            if (s.coeff(2 * m) != want) return "m=" + std::to_string(m);
        }
        return std::string();
    });
    c.run("series.deriv-vs-coefficients", [&] {
        StirlingTable table;
        unsigned kcap = std::min(N, 6u);
        for (unsigned k = 1; k <= kcap; ++k) {
            CoeffSeries ratio = arccos_ratio_pow(table, k, 12, false);
            for (unsigned m = 0; m <= 12; ++m) {
                Rational want = ratio.coeff(m) * Rational(factorial(m));
                if (deriv_at_one(table, k, m, DerivForm::ratio) != want)
                    return "ratio (k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
                Rational hyp = deriv_at_one(table, k, m, DerivForm::ratio_hyp);
                if (hyp != (k % 2 ? -want : want))
                    return "ratio-hyp (k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
            }
            CoeffSeries sh = shifted_forms(table, k, 12, ShiftedVariant::pi_minus_arccos);
            for (unsigned m = 0; m <= 12; ++m) {
                Rational want = sh.coeff(m) * Rational(factorial(m));
                if (deriv_at_one(table, k, m, DerivForm::shifted) != want)
                    return "shifted (k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
            }
        }
        return std::string();
    });
    c.run("series.even-pow-derivative-bridge", [&] {
        StirlingTable table;
        unsigned kcap = std::min(N, 4u);
        for (unsigned k = 1; k <= kcap; ++k) {
            CoeffSeries ratio = arccos_ratio_pow(table, k, 12, false);
            for (unsigned n = 0; n <= 12 + k && n <= 14; ++n) {
                Rational want(0);
                if (n >= k) {
                    // (arccos x)^{2k} = (-1)^k 2^k (x-1)^k * ratio series
                    Rational coeff = ratio.coeff(n - k) * Rational(pow_ui(2, k));
                    if (k % 2) coeff = -coeff;
                    want = coeff * Rational(factorial(n));
                }
                if (even_pow_deriv_at1(table, k, n, false) != want)
                    return at(n, k) + " circular";
                Rational hyp_want = k % 2 ? -want : want;
                if (even_pow_deriv_at1(table, k, n, true) != hyp_want)
                    return at(n, k) + " hyperbolic";
            }
        }
        return std::string();
    });
    c.run("series.maclaurin-anchor-k1", [&] {
        StirlingTable table;
        FixNum pi = pi_ref(30);
        FixNum pi2 = fix_mul(pi, pi);
        struct Target {
            unsigned j;
            FixNum value;
        };
        Target targets[] = {
            {0, fix_mul_rat(pi2, Rational(1, 4))},
            {1, fix_neg(pi)},
            {2, FixNum{pow_ui(10, 30), 30, Integer(0)}},
        };
        for (const auto& t : targets) {
            MaclaurinPartial mp = maclaurin_even_pow(table, 1, t.j, 40);
            if (!mp.tail_valid) return "tail invalid at j=" + std::to_string(t.j);
            Rational gap = abs(mp.value - t.value.value());
            if (gap > mp.tail_bound + t.value.error_bound())
                return "j=" + std::to_string(t.j) + " off target";
        }
        return std::string();
    });
    c.run("series.alpha-half-anchor", [&] {
        StirlingTable table;
        CoeffSeries s = ratio_pow_alpha(table, Rational(1, 2), 6);
        if (s.coeff(1) != Rational(-1, 12)) return std::string("n=1 coefficient");
        return std::string();
    });
    c.run("series.odd-power-not-expandable", [&] {
        for (unsigned k : {1u, 2u, 3u}) {
            try {
                odd_pow_at_one(k);
                return "no throw at k=" + std::to_string(k);
            } catch (const NotExpandableError&) {
            }
        }
        return std::string();
    });
    c.run("series.eval-consistency", [&] {
        std::mt19937_64 rng(seed ^ 0xe7a1u);
        StirlingTable table;
        CoeffSeries families[] = {
            arcsin_pow(table, 2, 10, false),
            arccos_ratio_pow(table, 1, 10, false),
            shifted_forms(table, 2, 10, ShiftedVariant::pi_minus_arccos),
        };
        for (const CoeffSeries& s : families)
            for (int rep = 0; rep < 5; ++rep) {
                long num = static_cast<long>(rng() % 19) - 9;
                Rational x(num, 10);  // safely inside every family's domain
                Rational exact = eval_exact(s, x);
                FixNum fx = eval_truncated(s, x, 25);
                if (abs(fx.value() - exact) > fx.error_bound())
                    return std::string("rounded evaluation outside certified error");
            }
        return std::string();
    });
}

void suite_pi(Collector& c, unsigned N, std::uint64_t) {
    c.run("pi.sq8-residual-1e10", [&] {
        FixNum r = residual(PiTag::parse("sq8", 1, Rational(1)), 60, 30);
        if (r.value() + r.error_bound() > Rational(Integer(1), pow_ui(10, 10)))
            return std::string("residual at M=60 above 1e-10");
        return std::string();
    });
    c.run("pi.classic-residuals-monotone", [&] {
        for (const char* name : {"classic-basel", "classic-odd", "classic-alt",
                                 "classic-central"}) {
            PiTag tag = PiTag::parse(name, 1, Rational(1));
            Rational prev_lo, prev_hi;
            for (unsigned M = 10; M <= 100; ++M) {
                FixNum r = residual(tag, M, 30);
                Rational lo = r.value() - r.error_bound();
                Rational hi = r.value() + r.error_bound();
                if (M > 10 && !(hi < prev_lo))
                    return std::string(name) + " not strictly decreasing at M=" +
                           std::to_string(M);
                prev_lo = lo;
                prev_hi = hi;
            }
        }
        return std::string();
    });
    c.run("pi.empirical-L1", [&] {
        LEstimate est = empirical_L(1, 200, 30);
        Rational gap = abs(est.root.value() - Rational(1, 2));
        if (gap + est.root.error_bound() > Rational(1, 20))
            return std::string("root estimate outside 0.05 of 1/2");
        Rational last = est.ratios.back().value();
        if (abs(last - Rational(1, 2)) > Rational(1, 50))
            return std::string("ratio sequence not near 1/2 at M=200");
        return std::string();
    });
    c.run("pi.pow8-equals-sq8-shift", [&] {
        PiTag pow8 = PiTag::parse("pow8", 1, Rational(1));
        PiTag sq8 = PiTag::parse("sq8", 1, Rational(1));
        for (unsigned M = 1; M <= 40; ++M)
            if (partial_sum(pow8, M) != partial_sum(sq8, M + 1))
                return "M=" + std::to_string(M);
        return std::string();
    });
    c.run("pi.pow8-power-consistency", [&] {
        PiTag one = PiTag::parse("pow8", 1, Rational(1));
        for (unsigned k : {2u, 3u}) {
            PiTag tag = PiTag::parse("pow8", k, Rational(1));
            Rational direct = partial_sum(tag, 300);
            Rational powered = pow_rat(partial_sum(one, 300), k);
            Rational gap = abs(direct - powered);
            if (gap > Rational(Integer(1), pow_ui(10, 8)))
                return "k=" + std::to_string(k) + " powers drift apart";
            FixNum r = residual(tag, 300, 30);
            if (r.value() > Rational(Integer(1), pow_ui(10, 8)))
                return "k=" + std::to_string(k) + " residual too large at M=300";
        }
        return std::string();
    });
    c.run("pi.sq8-increasing-bounded", [&] {
        PiTag tag = PiTag::parse("sq8", 1, Rational(1));
        FixNum target = target_value(tag, 30);
        Rational ceiling = target.value() + target.error_bound();
        Rational prev(-1);
        for (unsigned M = 1; M <= 60; ++M) {
            Rational p = partial_sum(tag, M);
            if (!(p > prev)) return "not increasing at M=" + std::to_string(M);
            if (!(p < ceiling)) return "exceeds target at M=" + std::to_string(M);
            prev = p;
        }
        return std::string();
    });
    c.run("pi.sqrt2pow-residual-shrinks", [&] {
        for (unsigned k : {1u, 2u, 3u}) {
            PiTag tag = PiTag::parse("sqrt2", k, Rational(1));
            FixNum r10 = residual(tag, 10, 30);
            FixNum r40 = residual(tag, 40, 30);
            if (!(r40.value() + r40.error_bound() < r10.value() - r10.error_bound()))
                return "k=" + std::to_string(k);
        }
        return std::string();
    });
    c.run("pi.alpha9-matches-series-eval", [&] {
        StirlingTable table;
        unsigned M = std::min(N, 15u);
        for (const Rational& alpha :
             {Rational(1), Rational(2), Rational(1, 2), Rational(-1, 2)}) {
            Rational a = alpha9_partial(alpha, M);
            Rational b = eval_exact(ratio_pow_alpha(table, alpha, M), Rational(1, 2));
            if (a != b) return "alpha=" + alpha.to_string();
        }
        return std::string();
    });
    c.run("pi.five-limits-approach", [&] {
        struct Probe {
            const char* name;
            Rational limit;
        };
        Probe probes[] = {
            {"classic-basel", Rational(1)},
            {"classic-odd", Rational(1)},
            {"classic-alt", Rational(1)},
            {"classic-central", Rational(1, 4)},
            {"sq8", Rational(1, 2)},
        };
        for (const Probe& p : probes) {
            PiTag tag = PiTag::parse(p.name, 1, Rational(1));
            Rational d100 = abs(root_estimate(tag, 100, 30).value() - p.limit);
            Rational d200 = abs(root_estimate(tag, 200, 30).value() - p.limit);
            if (!(d200 < d100)) return std::string(p.name) + " root estimate not approaching";
        }
        return std::string();
    });
}

} // namespace

VerifyReport verify_suite(const std::string& suite, unsigned max_n, std::uint64_t seed) {
    if (max_n == 0) throw UsageError("max_n must be at least 1");
    VerifyReport report;
    report.suite = suite;
    report.max_n = max_n;
    report.seed = seed;
    Collector c{report.cases};

    bool all = suite == "all";
    bool known = all;
    if (all || suite == "stirling") suite_stirling(c, max_n, seed), known = true;
    if (all || suite == "q") suite_q(c, max_n, seed), known = true;
    if (all || suite == "bell") suite_bell(c, max_n, seed), known = true;
    if (all || suite == "products") suite_products(c, max_n, seed), known = true;
    if (all || suite == "series") suite_series(c, max_n, seed), known = true;
    if (all || suite == "pi") suite_pi(c, max_n, seed), known = true;
    if (!known) throw UsageError("unknown verify suite: " + suite);

    std::sort(report.cases.begin(), report.cases.end(),
              [](const VerifyCase& a, const VerifyCase& b) { return a.name < b.name; });
    for (const VerifyCase& vc : report.cases)
        if (!vc.pass) ++report.failures;
    return report;
}

} // namespace qx
