#ifndef CURVEX_CONJECTURE_HPP
#define CURVEX_CONJECTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvex/classical.hpp"
#include "curvex/families.hpp"
#include "curvex/ratfn.hpp"

namespace curvex::conjecture {

struct EvidenceReport {
    std::string name;
    bool verified = false;
    long samples = 0;
    std::string details;
};

struct CalibrationResult {
    bool ok = false;
    std::vector<std::pair<std::string, Rat>> constants;
    long samples = 0;
    std::string details;
};

// K of the dual diagonal quartic equals J of the diagonal quartic, as an
// exact rational-function identity in t, then re-checked at the given
// admissible sample parameters.
EvidenceReport check_quartic_duality(const std::vector<Rat>& ts);

// Re-derives the sextic calibration and validates J, K, L of the associated
// sextic family against the closed forms at 20 held-out parameter points.
CalibrationResult calibrate_sextics();

// Fits the constants tying the sextic absolute invariants of the associated
// family to the quintic ones,
//   K6 = 2^20 3^6 5^5 k + c1 l + c2 j l + c3 j^3 + c4 j^2 + c5 j
//   L6 = -12 l / (25 * 10!) + c6 j^2 + c7 j,
// then proves both as rational-function identities in s, t.
CalibrationResult fit_connections();
EvidenceReport check_connections();

// Per-degree constants of the one-parameter family z^n + t z^(n-1) w + w^n:
//   mu, nu     J = 1 / (mu t^n + nu), explicit, verified symbolically
//   rho, sigma (H,H)-transvectant of the associated form = D^2 (rho D + sigma)
//              with D the family discriminant
//   rho2, sigma2  M of the associated form = rho2 t^n + sigma2.
// The Hessian transvectant order is 2(2n-6), the full order for that degree.
CalibrationResult fit_ft_constants(int n);

// Runs the symbolic identities above for each n, plus exact 4-point checks
// of the affine law for M.
EvidenceReport check_ft_associated(const std::vector<int>& ns);

// Certificate for a three-power-family parameter pair with equal K and
// opposite nonzero L. On this family L(t) = lead * t^2 (t-1)^2 / (t^2-t+1)^3
// with lead > 0, so no real parameter carries negative L and the partner is
// complex: in u = t + 1/t the level equation L = -l1 reads
// l1 (u-1)^3 + lead (u-2) = 0, a cubic that is negative at u = -2 and
// positive at u = 2 and hence has a real root u0 strictly inside (-2, 2).
// [lo, hi] isolates u0; t2 = (u0 + i sqrt(4 - u0^2))/2 then satisfies
// L(t2) = -l1 exactly, K(t2) = K(t1) via L^2 = J K with constant J, and t2
// is nonreal while the symmetry orbit of a rational t1 is rational.
struct ThreePowerPair {
    Rat t1;
    Rat l1;      // L(t1), nonzero
    Rat lead;    // the constant in L = lead (u-2)/(u-1)^3
    Rat lo, hi;  // isolating bracket for u0, width < 1e-60 (lo = hi: rational)
};

// Runs the certification for the given t1; nullopt when L(t1) is zero or
// undefined, or the factorization/bracketing fails.
std::optional<ThreePowerPair> certify_three_power_pair(const Rat& t1);

// The invariants J, K, L are jointly indispensable for quintics:
//   - z^5 + t z^4 w + w^5 has K = L = 0 identically and nonconstant J;
//   - the reciprocal family has J = L = 0 identically and nonconstant K;
//   - the three-power family has constant J, and a parameter pair off the
//     symmetry orbit with equal K and opposite nonzero L.
// The search first scans t = p/q with |p|, |q| <= 30 for a rational pair by
// exact K-level pairing; the level equation admits no rational collision in
// that box, so the suite then certifies an algebraic pair via
// certify_three_power_pair.
EvidenceReport counterexample_suite();

// F from the closed form of K6 agrees with its expression through I12, the
// family discriminant and the degree-10 transvectant, symbolically in s, t.
EvidenceReport check_expressF();

std::vector<EvidenceReport> run_all();

}  // namespace curvex::conjecture

#endif
