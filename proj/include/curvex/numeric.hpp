#ifndef CURVEX_NUMERIC_HPP
#define CURVEX_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

#include "curvex/rational.hpp"

namespace curvex {

using Mpfr = boost::multiprecision::mpfr_float;

// An interval operation could not decide: division by an interval containing
// zero, fractional power of an interval touching zero, and the like. Raising
// the working precision usually resolves it.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scoped working precision (decimal digits) for newly constructed Mpfr.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Closed interval [mid - rad, mid + rad]. Radii are maintained
// conservatively: each operation adds the propagated radii, a bound on the
// local rounding error, and a fixed relative slack that dominates the
// rounding of the radius arithmetic itself.
struct Ball {
    Mpfr mid, rad;

    Ball() : mid(0), rad(0) {}
    static Ball from_rat(const Rat& r);
    static Ball exact(long v) { return Ball{Mpfr(v), Mpfr(0)}; }
    Ball(Mpfr m, Mpfr r) : mid(std::move(m)), rad(std::move(r)) {}

    bool contains_zero() const;
    bool is_positive() const;  // entire interval > 0
    Mpfr abs_upper() const;
    Mpfr abs_lower() const;

    Ball operator-() const { return Ball{-mid, rad}; }
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    Ball inverse() const;  // IndeterminateError when the interval meets 0
    Ball pow_int(long e) const;
    Ball sqrt_pos() const;             // requires is_positive()
    Ball pow_rat(const Rat& e) const;  // requires is_positive()

    std::string str() const;
    friend bool overlap(const Ball& a, const Ball& b);
    Mpfr gap(const Ball& b) const;  // distance between the intervals, >= 0
};

// Rectangle re + i*im of two real intervals.
struct CBall {
    Ball re, im;

    CBall() = default;
    explicit CBall(Ball r) : re(std::move(r)) {}
    CBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}
    static CBall from_rat(const Rat& r) { return CBall(Ball::from_rat(r)); }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    CBall operator-() const { return CBall(-re, -im); }
    friend CBall operator+(const CBall& a, const CBall& b);
    friend CBall operator-(const CBall& a, const CBall& b);
    friend CBall operator*(const CBall& a, const CBall& b);
    friend CBall operator/(const CBall& a, const CBall& b);
    CBall inverse() const;
    CBall pow_int(long e) const;
    Ball norm2() const;

    std::string str() const;
    friend bool overlap(const CBall& a, const CBall& b);
    Mpfr gap(const CBall& b) const;
};

// e^(2 pi i k / n) at the current working precision.
CBall root_of_unity(long k, long n);

// Re-registers a value at the current working precision, growing the radius
// by one rounding unit; use when a ball crosses a PrecisionGuard boundary.
Ball refreshed(Ball b);
CBall refreshed(CBall b);

}  // namespace curvex

#endif
