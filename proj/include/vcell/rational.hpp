#ifndef VCELL_RATIONAL_HPP
#define VCELL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace vcell {

// Exact arbitrary-precision rational scalar. GMP keeps the value canonical:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. Expression templates are off:
// arithmetic yields values, never reference-holding proxies.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

// The (long, long) mpq constructor misreads negative denominators; route
// through mpz so canonicalization applies.
inline Rational make_rational(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(Integer(n), Integer(d));
}

inline int sign(const Rational& q) { return q.sign(); }

// Parses "a/b" or "a" with optional sign; decimal digits only.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        if (d == 0) throw std::domain_error("rational with zero denominator");
        return Rational(n, d);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational pow(const Rational& q, unsigned e) {
    Rational r(1);
    Rational base = q;
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace vcell

#endif
