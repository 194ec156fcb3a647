#include "qexpand/bell.hpp"

#include <functional>
#include <map>

#include "qexpand/factorials.hpp"
#include "qexpand/qfunc.hpp"

namespace qx {

namespace {

void require_bell_args(unsigned n, unsigned k, const BellArgs& args) {
    if (k == 0 || k > n) throw DomainError("bell requires 1 <= k <= n");
    if (args.size() < n - k + 1)
        throw DomainError("bell needs at least n-k+1 argument values");
}

} // namespace

Rational bell(unsigned n, unsigned k, const BellArgs& args) {
    require_bell_args(n, k, args);
    unsigned L = n - k + 1;
    Rational total(0);
    std::vector<unsigned> l(L + 1, 0);  // l[i] = multiplicity of part i

    // Depth-first over parts i = 1..L with remaining sums tracked.
    std::function<void(unsigned, unsigned, unsigned)> walk =
        [&](unsigned i, unsigned parts_left, unsigned weight_left) {
            if (i > L) {
                if (parts_left == 0 && weight_left == 0) {
                    Rational term(factorial(n));
                    for (unsigned j = 1; j <= L; ++j) {
                        if (l[j] == 0) continue;
                        Rational piece = pow_rat(args[j - 1] / Rational(factorial(j)), l[j]);
                        term *= piece / Rational(factorial(l[j]));
                    }
                    total += term;
                }
                return;
            }
            unsigned max_l = weight_left / i;
            if (max_l > parts_left) max_l = parts_left;
            for (unsigned c = 0; c <= max_l; ++c) {
                // Parts beyond i cannot absorb weight faster than L per part.
                unsigned p = parts_left - c, w = weight_left - c * i;
                if (w > p * L) continue;
                if (p > w) continue;  // every part has weight >= 1... i >= 1
                l[i] = c;
                walk(i + 1, p, w);
            }
            l[i] = 0;
        };
    walk(1, k, n);
    return total;
}

Rational bell_rec(unsigned n, unsigned k, const BellArgs& args) {
    require_bell_args(n, k, args);
    // memo[(n,k)] over the subproblems; base B_{0,0} = 1.
    std::map<std::pair<unsigned, unsigned>, Rational> memo;
    std::function<const Rational&(unsigned, unsigned)> go =
        [&](unsigned nn, unsigned kk) -> const Rational& {
            auto key = std::make_pair(nn, kk);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            Rational v(0);
            if (nn == 0 && kk == 0) {
                v = Rational(1);
            } else if (nn > 0 && kk > 0) {
                for (unsigned i = 1; i + kk - 1 <= nn && i <= args.size(); ++i) {
                    if (args[i - 1].is_zero()) continue;
                    v += Rational(binomial(nn - 1, i - 1)) * args[i - 1] * go(nn - i, kk - 1);
                }
            }
            return memo.emplace(key, std::move(v)).first->second;
        };
    return go(n, k);
}

bool bell_genfun_check(unsigned n, unsigned k, const BellArgs& args) {
    require_bell_args(n, k, args);
    // f(t) = sum_{m=1..n} x_m t^m / m!, raised to the k-th power, truncated.
    std::vector<Rational> f(n + 1, Rational(0));
    for (unsigned m = 1; m <= n && m <= args.size(); ++m)
        f[m] = args[m - 1] / Rational(factorial(m));
    std::vector<Rational> p(n + 1, Rational(0));
    p[0] = Rational(1);
    for (unsigned rep = 0; rep < k; ++rep) {
        std::vector<Rational> next(n + 1, Rational(0));
        for (unsigned i = 0; i <= n; ++i) {
            if (p[i].is_zero()) continue;
            for (unsigned j = 1; i + j <= n; ++j)
                next[i + j] += p[i] * f[j];
        }
        p = std::move(next);
    }
    Rational value = p[n] * Rational(factorial(n)) / Rational(factorial(k));
    return value == bell(n, k, args);
}

BellReport check_special_values(unsigned n, unsigned k, const Rational& alpha,
                                const Rational& beta) {
    if (k == 0 || k > n) throw DomainError("check_special_values requires 1 <= k <= n");
    BellReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    std::string where = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";

    // (i) scaling law against a fixed base sequence 1, 2, ..., n-k+1 shifted
    // by alternating signs to keep the instance nontrivial.
    BellArgs base;
    for (unsigned i = 1; i <= n - k + 1; ++i)
        base.push_back(Rational(i % 2 ? Integer(i) : -Integer(i), Integer(i + 1)));
    BellArgs scaled;
    for (unsigned i = 1; i <= n - k + 1; ++i)
        scaled.push_back(alpha * pow_rat(beta, i) * base[i - 1]);
    Rational lhs = bell(n, k, scaled);
    Rational rhs = pow_rat(alpha, k) * pow_rat(beta, n) * bell(n, k, base);
    if (lhs != rhs)
        fail("scaling law violated at " + where);

    // (ii) quadratic case B_{n,k}(alpha,1,0,...,0).
    long e = 2 * static_cast<long>(k) - static_cast<long>(n);
    if (!(e < 0 && alpha.is_zero())) {
        BellArgs quad(n - k + 1, Rational(0));
        quad[0] = alpha;
        if (n - k + 1 >= 2) quad[1] = Rational(1);
        Rational direct = bell(n, k, quad);
        Rational closed(0);
        if (n <= 2 * k) {
            closed = Rational(factorial(n - k), pow_ui(2, n - k)) *
                     Rational(binomial(n, k) * binomial(k, n - k)) * pow_int(alpha, e);
        }
        if (direct != closed)
            fail("quadratic closed form violated at " + where +
                 ": " + direct.to_string() + " vs " + closed.to_string());
    }

    // (iii) double-factorial case B_{n,k}((-1)!!, 1!!, 3!!, ...).
    BellArgs dfact;
    for (unsigned i = 1; i <= n - k + 1; ++i)
        dfact.push_back(Rational(double_factorial(2 * static_cast<long>(i) - 3)));
    Rational direct = bell(n, k, dfact);
    Rational closed = Rational(double_factorial(2 * (static_cast<long>(n) - k) - 1) *
                               binomial(2 * n - k - 1, 2 * (n - k)));
    if (direct != closed)
        fail("double-factorial closed form violated at " + where +
             ": " + direct.to_string() + " vs " + closed.to_string());

    return rep;
}

Rational faa_di_bruno(unsigned n, const std::vector<Rational>& outer_derivs,
                      const std::vector<Rational>& inner_derivs) {
    if (outer_derivs.size() < n + 1)
        throw DomainError("faa_di_bruno needs outer derivatives f^(0)..f^(n)");
    if (inner_derivs.size() < n)
        throw DomainError("faa_di_bruno needs inner derivatives h^(1)..h^(n)");
    if (n == 0) return outer_derivs[0];
    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        BellArgs args(inner_derivs.begin(), inner_derivs.begin() + (n - k + 1));
        sum += outer_derivs[k] * bell(n, k, args);
    }
    return sum;
}

Rational bell_arccos(StirlingTable& table, unsigned m, unsigned k) {
    if (k == 0 || k > m) throw DomainError("bell_arccos requires 1 <= k <= m");

    // Route (a): scaled Bell value at t_i = (2i)!!/(2i+2)! * Q(2,2i).
    BellArgs t;
    for (unsigned i = 1; i <= m - k + 1; ++i)
        t.push_back(Rational(double_factorial(2 * static_cast<long>(i)), factorial(2 * i + 2)) *
                    q_km(table, 2, 2 * i));
    Rational route_a = Rational(pow_ui(2, k)) * bell(m, k, t);

    // Route (b): closed form through Q(2j,2m).
    Rational inner(0);
    for (unsigned j = 1; j <= k; ++j) {
        Rational term = Rational(factorial(2 * j) * binomial(k, j)) *
                        q_km(table, 2 * j, 2 * m) / Rational(factorial(2 * j + 2 * m));
        inner += (j % 2 ? -term : term);
    }
    Rational front = Rational(double_factorial(2 * (static_cast<long>(m) - k))) *
                     Rational(binomial(m, k));
    Rational route_b = Rational(k % 2 ? -1 : 1) * Rational(pow_ui(2, k)) * front * inner;

    if (route_a != route_b)
        throw InternalInconsistency("bell_arccos routes disagree at (m=" + std::to_string(m) +
                                    ",k=" + std::to_string(k) + "): " + route_a.to_string() +
                                    " vs " + route_b.to_string());
    return route_a;
}

Rational bell_arccos(unsigned m, unsigned k) {
    StirlingTable table;
    return bell_arccos(table, m, k);
}

BellReport check_envelope_identity(unsigned k_max) {
    BellReport rep;
    for (unsigned k = 1; k <= k_max; ++k) {
        Rational sum(0);
        for (unsigned j = 0; j <= k; ++j) {
            Rational term = falling(Rational(2 * static_cast<long>(k)), j) *
                            Rational(double_factorial(2 * (static_cast<long>(k) - j) - 1)) *
                            Rational(binomial(2 * k - j - 1, 2 * (k - j)));
            sum += (j % 2 ? -term : term);
        }
        Rational want = Rational(k % 2 ? -1 : 1) * Rational(double_factorial(2 * static_cast<long>(k)));
        if (sum != want) {
            rep.ok = false;
            rep.violations.push_back("envelope identity fails at k=" + std::to_string(k) +
                                     ": " + sum.to_string() + " vs " + want.to_string());
        }
    }
    return rep;
}

BellReport check_companion_identity(unsigned n_max) {
    BellReport rep;
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational sum(0);
        for (unsigned k = 0; k <= n; ++k) {
            sum += Rational(factorial(k) * double_factorial(2 * (static_cast<long>(n) - k) - 1) *
                            binomial(2 * n - k - 1, 2 * (n - k)));
        }
        Rational want(double_factorial(2 * static_cast<long>(n) - 1));
        if (sum != want) {
            rep.ok = false;
            rep.violations.push_back("companion identity fails at n=" + std::to_string(n) +
                                     ": " + sum.to_string() + " vs " + want.to_string());
        }
    }
    return rep;
}

} // namespace qx
