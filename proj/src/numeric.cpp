#include "curvex/numeric.hpp"

#include <utility>

namespace curvex {

namespace {

// Upper bound on the relative rounding error of one correctly rounded MPFR
// operation at the current working precision.
Mpfr round_eps() {
    long digits = static_cast<long>(Mpfr::default_precision());
    return boost::multiprecision::pow(Mpfr(10), 1 - digits);
}

const Mpfr& slack() {
    static thread_local Mpfr s = 0;
    if (s == 0) s = Mpfr(1) + Mpfr("1e-6");
    return s;
}

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned digits10) : saved_(Mpfr::default_precision()) {
    Mpfr::default_precision(digits10);
}

PrecisionGuard::~PrecisionGuard() { Mpfr::default_precision(saved_); }

Ball Ball::from_rat(const Rat& r) {
    Mpfr mid = Mpfr(rat_num(r)) / Mpfr(rat_den(r));
    Mpfr rad = abs(mid) * round_eps();
    return Ball{std::move(mid), std::move(rad)};
}

bool Ball::contains_zero() const { return abs(mid) <= rad; }

bool Ball::is_positive() const { return mid > rad; }

Mpfr Ball::abs_upper() const { return abs(mid) + rad; }

Mpfr Ball::abs_lower() const {
    Mpfr lo = abs(mid) - rad;
    return lo > 0 ? lo : Mpfr(0);
}

Ball operator+(const Ball& a, const Ball& b) {
    Mpfr mid = a.mid + b.mid;
    Mpfr rad = (a.rad + b.rad + abs(mid) * round_eps()) * slack();
    return Ball{std::move(mid), std::move(rad)};
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
    Mpfr mid = a.mid * b.mid;
    Mpfr rad =
        (a.rad * b.abs_upper() + abs(a.mid) * b.rad + abs(mid) * round_eps()) * slack();
    return Ball{std::move(mid), std::move(rad)};
}

Ball Ball::inverse() const {
    if (contains_zero()) throw IndeterminateError("interval division touches zero");
    Mpfr m = Mpfr(1) / mid;
    Mpfr rad2 = (rad / (abs(mid) * abs_lower()) + abs(m) * round_eps()) * slack();
    return Ball{std::move(m), std::move(rad2)};
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }

Ball Ball::pow_int(long e) const {
    if (e < 0) return inverse().pow_int(-e);
    Ball acc = Ball::exact(1);
    Ball base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Ball Ball::sqrt_pos() const {
    if (!is_positive()) throw IndeterminateError("sqrt of an interval not strictly positive");
    Mpfr m = sqrt(mid);
    Mpfr lo = mid - rad;
    Mpfr rad2 = (rad / (2 * sqrt(lo)) + m * round_eps()) * slack();
    return Ball{std::move(m), std::move(rad2)};
}

Ball Ball::pow_rat(const Rat& e) const {
    if (!is_positive())
        throw IndeterminateError("fractional power of an interval not strictly positive");
    Mpfr ex = Mpfr(rat_num(e)) / Mpfr(rat_den(e));
    Mpfr m = pow(mid, ex);
    Mpfr lo = mid - rad;
    Mpfr hi = mid + rad;
    // sup |e x^(e-1)| over [lo, hi] bounds the first-order term
    Mpfr dlo = pow(lo, ex - 1);
    Mpfr dhi = pow(hi, ex - 1);
    Mpfr bound = abs(ex) * (dlo > dhi ? dlo : dhi);
    Mpfr rad2 = (bound * rad + 2 * abs(m) * round_eps()) * slack();
    return Ball{std::move(m), std::move(rad2)};
}

std::string Ball::str() const {
    return mid.str(12, std::ios_base::scientific) + " +- " + rad.str(3, std::ios_base::scientific);
}

bool overlap(const Ball& a, const Ball& b) { return abs(a.mid - b.mid) <= a.rad + b.rad; }

Mpfr Ball::gap(const Ball& b) const {
    Mpfr d = abs(mid - b.mid) - (rad + b.rad);
    return d > 0 ? d : Mpfr(0);
}

CBall operator+(const CBall& a, const CBall& b) { return CBall(a.re + b.re, a.im + b.im); }

CBall operator-(const CBall& a, const CBall& b) { return CBall(a.re - b.re, a.im - b.im); }

CBall operator*(const CBall& a, const CBall& b) {
    return CBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Ball CBall::norm2() const { return re * re + im * im; }

CBall CBall::inverse() const {
    Ball n2 = norm2();
    if (n2.contains_zero()) throw IndeterminateError("complex interval division touches zero");
    return CBall(re / n2, -im / n2);
}

CBall operator/(const CBall& a, const CBall& b) { return a * b.inverse(); }

CBall CBall::pow_int(long e) const {
    if (e < 0) return inverse().pow_int(-e);
    CBall acc(Ball::exact(1));
    CBall base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string CBall::str() const {
    if (im.contains_zero() && im.rad == 0) return re.str();
    return "(" + re.str() + ") + i*(" + im.str() + ")";
}

bool overlap(const CBall& a, const CBall& b) {
    return overlap(a.re, b.re) && overlap(a.im, b.im);
}

Mpfr CBall::gap(const CBall& b) const {
    Mpfr gr = re.gap(b.re);
    Mpfr gi = im.gap(b.im);
    return gr > gi ? gr : gi;
}

Ball refreshed(Ball b) {
    b.mid.precision(Mpfr::default_precision());
    b.rad = b.rad + abs(b.mid) * round_eps();
    return b;
}

CBall refreshed(CBall b) {
    b.re = refreshed(std::move(b.re));
    b.im = refreshed(std::move(b.im));
    return b;
}

CBall root_of_unity(long k, long n) {
    if (n == 0) throw std::domain_error("root_of_unity: zero order");
    Mpfr pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    Mpfr theta = 2 * pi * Mpfr(k) / Mpfr(n);
    Mpfr eps = round_eps();
    Mpfr rad = (Mpfr(4) + 4 * abs(theta)) * eps;
    return CBall(Ball{cos(theta), rad}, Ball{sin(theta), rad});
}

}  // namespace curvex
