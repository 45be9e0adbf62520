#ifndef CURVEX_RATFN_HPP
#define CURVEX_RATFN_HPP

#include <stdexcept>
#include <string>

#include "curvex/poly.hpp"

namespace curvex {

// Formal quotient of polynomials. Not reduced to lowest terms (no
// multivariate gcd here); equality is decided by cross-multiplication, which
// is exact over an integral domain.
struct RatFn {
    Poly num;
    Poly den;  // nonzero

    RatFn() : num(), den(Rat(1)) {}
    explicit RatFn(const Rat& c) : num(c), den(Rat(1)) {}
    RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
        if (num.is_zero()) {
            den = Poly(Rat(1));
            return;
        }
        // Pull the rational content out of the denominator to keep chained
        // products from accumulating huge integer factors.
        Rat c = den.content();
        if (den.leading_coefficient() < 0) c = -c;
        num = Rat(1) / c * num;
        den = Rat(1) / c * den;
    }

    bool is_zero() const { return num.is_zero(); }
    // True when the value is a constant, even if num/den is not reduced.
    bool is_constant() const {
        if (num.is_zero()) return true;
        if (num.is_constant() && den.is_constant()) return true;
        auto q = Poly::divide_exact(num, den);
        return q && q->is_constant();
    }
    Rat rational_value() const {
        if (num.is_zero()) return Rat(0);
        if (num.is_constant() && den.is_constant())
            return num.constant_value() / den.constant_value();
        auto q = Poly::divide_exact(num, den);
        if (!q || !q->is_constant()) throw std::logic_error("RatFn: not a constant");
        return q->constant_value();
    }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return RatFn(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num * b.num, a.den * b.den);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
        return RatFn(a.num * b.den, a.den * b.num);
    }
    RatFn pow(unsigned e) const { return RatFn(num.pow(e), den.pow(e)); }

    std::string str() const {
        if (den.is_constant() && den.constant_value() == 1) return num.str();
        return "(" + num.str() + ") / (" + den.str() + ")";
    }
};

}  // namespace curvex

#endif
