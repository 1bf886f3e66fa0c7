#include "zhualg/rational.hpp"

#include <ostream>

namespace zhualg {

namespace {

mpz_class parse_mpz(const std::string& s) {
    if (s.empty()) throw InputError("empty integer literal");
    try {
        return mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw InputError("bad integer literal: '" + s + "'");
    }
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_mpz(s), mpz_class(1));
    if (s.find('/', slash + 1) != std::string::npos)
        throw InputError("bad rational literal: '" + s + "'");
    return Rational(parse_mpz(s.substr(0, slash)), parse_mpz(s.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

long Rational::to_long() const {
    if (!is_integer()) throw InputError("rational " + str() + " is not an integer");
    const mpz_class n = num();
    if (!n.fits_slong_p()) throw InputError("integer " + n.get_str() + " does not fit in long");
    return n.get_si();
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binom_general(const Rational& q, long j) {
    if (j < 0) throw InputError("binomial with negative lower index");
    Rational r(1);
    for (long t = 0; t < j; ++t) {
        r *= q - Rational(t);
        r /= Rational(t + 1);
    }
    return r;
}

std::vector<Rational> binomial_row(const Rational& q, long max_j) {
    if (max_j < 0) throw InputError("binomial row with negative length");
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(max_j) + 1);
    row.emplace_back(1);
    for (long t = 0; t < max_j; ++t)
        row.push_back(row.back() * (q - Rational(t)) / Rational(t + 1));
    return row;
}

}  // namespace zhualg
