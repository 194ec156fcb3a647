#include "qexpand/stirling.hpp"

#include <mutex>

#include "qexpand/factorials.hpp"

namespace qx {

StirlingTable::StirlingTable() {
    rows_.push_back({Integer(1)});  // s(0,0) = 1
}

void StirlingTable::ensure(unsigned n) {
    while (rows_.size() <= n) {
        unsigned prev = static_cast<unsigned>(rows_.size()) - 1;
        const auto& p = rows_[prev];
        std::vector<Integer> row(prev + 2);
        row[0] = 0;
        for (unsigned k = 1; k <= prev + 1; ++k) {
            // s(n+1,k) = s(n,k-1) - n*s(n,k)
            row[k] = p[k - 1];
            if (k <= prev) row[k] -= Integer(prev) * p[k];
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& StirlingTable::s(unsigned n, unsigned k) {
    if (k > n) throw DomainError("stirling1 requires k <= n");
    ensure(n);
    return rows_[n][k];
}

namespace {

StirlingTable& shared_table() {
    static StirlingTable t;
    return t;
}

std::mutex& shared_mutex() {
    static std::mutex m;
    return m;
}

// Truncated formal series with rational coefficients, index = power of x.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, unsigned trunc) {
    Series r(trunc + 1, Rational(0));
    for (unsigned i = 0; i <= trunc && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= trunc && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// Cached powers of ln(1+x): log_powers[k] = [ln(1+x)]^k truncated.
struct OracleCache {
    unsigned trunc = 0;
    std::vector<Series> powers;  // powers[0] = 1
};

OracleCache& oracle_cache() {
    static OracleCache c;
    return c;
}

} // namespace

Integer stirling1(unsigned n, unsigned k) {
    std::lock_guard<std::mutex> lock(shared_mutex());
    return shared_table().s(n, k);
}

Integer stirling_oracle(unsigned n, unsigned k) {
    if (k > n) throw DomainError("stirling_oracle requires k <= n");
    if (n == 0) return 1;
    if (k == 0) return 0;

    std::lock_guard<std::mutex> lock(shared_mutex());
    auto& cache = oracle_cache();
    if (cache.trunc < n) {
        Series log(n + 1, Rational(0));
        for (unsigned i = 1; i <= n; ++i)
            log[i] = Rational(Integer(i % 2 ? 1 : -1), Integer(i));
        cache.trunc = n;
        cache.powers.assign(1, Series{Rational(1)});
        cache.powers.push_back(log);
    }
    while (cache.powers.size() <= k) {
        const Series& log = cache.powers[1];
        cache.powers.push_back(series_mul(cache.powers.back(), log, cache.trunc));
    }
    const Series& pk = cache.powers[k];
    Rational c = n < pk.size() ? pk[n] : Rational(0);
    Rational value = c * Rational(factorial(n)) / Rational(factorial(k));
    if (!value.is_integer())
        throw InternalInconsistency("stirling_oracle produced a non-integer");
    return value.numerator();
}

bool check_binom_identity(unsigned n, const Rational& z) {
    Rational lhs = Rational(factorial(n)) * binom(z, n);
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k)
        rhs += Rational(stirling1(n, k)) * pow_rat(z, k);
    return lhs == rhs;
}

} // namespace qx
