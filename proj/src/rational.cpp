#include "qexpand/rational.hpp"

#include <cctype>

namespace qx {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] { throw DomainError("malformed rational \"" + std::string(s) + "\""); };
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (b == e) bad();
    std::string body(s.substr(b, e - b));

    auto parse_int = [&](const std::string& t) {
        if (t.empty()) bad();
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
        return Integer(t);
    };

    auto slash = body.find('/');
    if (slash == std::string::npos) return Rational(parse_int(body), Integer(1));
    Integer num = parse_int(body.substr(0, slash));
    Integer den = parse_int(body.substr(slash + 1));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& q) {
    return q.sign() < 0 ? -q : q;
}

Rational inverse(const Rational& q) {
    if (q.is_zero()) throw DomainError("inverse of zero");
    return Rational(1) / q;
}

} // namespace qx
