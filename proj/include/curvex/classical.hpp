#ifndef CURVEX_CLASSICAL_HPP
#define CURVEX_CLASSICAL_HPP

#include <array>
#include <optional>
#include <string>

#include "curvex/binary_form.hpp"
#include "curvex/ratfn.hpp"

namespace curvex {

// An absolute invariant: a ratio of polynomial invariants. For parametric
// forms the value is a rational function of the parameters; defined means the
// denominator is not identically zero.
struct InvariantValue {
    std::string name;
    bool defined = false;
    RatFn value;
};

// J(Q) = T^(n-1) / disc(Q) for even n with T = (Q,Q)^(n), and
// J(Q) = S^((n-1)/2) / disc(Q) for odd n with S = (Q^2,Q^2)^(2n).
// Requires deg Q >= 3.
InvariantValue inv_J(const BinaryForm& q);

// M(Q) = (H,H)^(2(n-2)) / T^2 with H the Hessian and T = (Q,Q)^(n).
// Requires even deg Q >= 4.
InvariantValue inv_M(const BinaryForm& q);

// Quartics: I2 = a0 a4 - 4 a1 a3 + 3 a2^2 and the catalecticant I3 (both in
// the binomial convention), delta = I2^3 - 27 I3^2, J = I2^3 / delta,
// K = I2^3 / (27 I3^2).
struct QuarticInvariants {
    Poly I2, I3, delta;
    InvariantValue J, K;
};
QuarticInvariants quartic_invariants(const BinaryForm& q);

// Canonizant of a quintic: the cubic covariant
// det [[a5 z + a4 w, a4 z + a3 w, a3 z + a2 w], [.., .., ..], [.., .., ..]]
// in the binomial convention. May be identically zero.
BinaryForm canonizant(const BinaryForm& q);

// Quintics: N = (Q^2,Q^2)^(10), I4 = N / (7200000 * 10!),
// I8 = (I4^2 - delta) / 128, I12 = -27 * disc(canonizant),
// J = N^2 / delta, K = I12^2 / delta^3, L = N * I12 / delta^2.
struct QuinticInvariants {
    Poly I4, I8, I12, delta;
    InvariantValue J, K, L;
};
QuinticInvariants quintic_invariants(const BinaryForm& q);

// 16 I18^2 = I4 I8^4 + 8 I8^3 I12 - 2 I4^2 I8^2 I12 - 72 I4 I8 I12^2
//            - 432 I12^3 + I4^3 I12^2 holds for every quintic; returns the
// exact square root witness I18 >= 0 of the right side over 16.
// Requires rational coefficients; nullopt means the identity failed.
std::optional<Rat> verify_i18_square(const BinaryForm& q);

// Sextic invariant basis used for calibration, all built from bare
// transvectants: i = (Q,Q)^(4), B = (i,i)^(4), l = (Q,i)^(4), C = (l,l)^(2),
// m = (i,l)^(2), D = (m,m)^(2). I4 and I10 are expressed over it once, by
// solving exact linear systems against the closed-form family values:
//   I4  = alpha I2^2 + beta B
//   I10 = g0 I2^5 + g1 I2^3 B + g2 I2 B^2 + g3 I2^2 C + g4 B C + g5 D.
struct SexticCalibration {
    Rat alpha, beta;
    std::array<Rat, 6> gamma;
};

struct SexticCalibrationOutcome {
    bool ok = false;
    SexticCalibration values;
    std::string details;
    long samples = 0;
};

// Runs the calibration solve; never throws on mathematical failure.
const SexticCalibrationOutcome& try_sextic_calibration();
// Calibrated constants; throws logic_error when the solve failed.
const SexticCalibration& sextic_calibration();

// Sextics: I2 = (Q,Q)^(6) / (6!)^2, E = I2^2 - 2 I4, J = (3/5) I2^2 / E,
// K = 759375 I10^2 / E^5, L = 675 I2 I10 / E^3, with I4 and I10 from the
// calibrated expressions.
struct SexticInvariants {
    Poly I2, I4, I10;
    InvariantValue J, K, L;
};
SexticInvariants sextic_invariants(const BinaryForm& q);

}  // namespace curvex

#endif
