#ifndef CURVEX_RATIONAL_HPP
#define CURVEX_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace curvex {

// Exact arbitrary-precision scalars. GMP keeps rationals canonical:
// gcd(|num|, den) = 1 and den > 0 after every operation.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(rat_den(base), rat_num(base)) : base;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int acc(1);
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int acc(1);
    for (unsigned i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

// Exact square root of a non-negative rational, when one exists.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int sn = sqrt(rat_num(r)), sd = sqrt(rat_den(r));
    if (sn * sn != rat_num(r) || sd * sd != rat_den(r)) return std::nullopt;
    return Rat(sn, sd);
}

// Parses "p" or "p/q" with optional sign; rejects q = 0.
inline Rat parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    // GMP takes "-p" but not "+p"
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (body.empty()) throw bad();
    auto slash = body.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(body));
        Int p(body.substr(0, slash)), q(body.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline std::string rat_str(const Rat& r) {
    return rat_den(r) == 1 ? rat_num(r).str() : rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace curvex

#endif
