#ifndef CURVEX_EQUIV_HPP
#define CURVEX_EQUIV_HPP

#include <string>
#include <variant>
#include <vector>

#include "curvex/classical.hpp"
#include "curvex/families.hpp"
#include "curvex/numeric.hpp"

namespace curvex {

enum class EquivMode { exact, numeric };

// One compared invariant. In numeric mode, gap is an upper bound on
// |lhs - rhs| when matched and a certified lower bound when not.
struct WitnessEntry {
    std::string name, lhs, rhs;
    bool matched = false;
    std::string gap;
};

struct EquivalenceVerdict {
    bool equivalent = false;
    EquivMode mode = EquivMode::exact;
    unsigned digits = 0;  // 0 in exact mode
    std::vector<WitnessEntry> witness;
};

// Quartic orbits are separated by J; requires both square-free.
EquivalenceVerdict equivalent_quartics(const BinaryForm& a, const BinaryForm& b);

// Quintic orbits are separated by (J, K, L); requires both square-free.
EquivalenceVerdict equivalent_quintics(const BinaryForm& a, const BinaryForm& b);

// Family parameters: exact rationals, or complex intervals for numeric work.
using ParamValue = std::variant<Rat, CBall>;

// Germs cut out by z^n + t z^(n-1) w + w^n, n >= 4: equivalent iff
// t1^n = t2^n. Inadmissible parameters (vanishing discriminant) raise
// domain_error; numerically undecidable ones raise IndeterminateError.
EquivalenceVerdict germ_equiv_family_t(int n, const ParamValue& t1, const ParamValue& t2,
                                       unsigned digits = 50);

// Germs cut out by z^5 + s z^4 w + t z^3 w^2 + w^5: equivalent iff the
// absolute invariants j, k, l all agree.
EquivalenceVerdict germ_equiv_family_st(const ParamValue& s1, const ParamValue& t1,
                                        const ParamValue& s2, const ParamValue& t2,
                                        unsigned digits = 50);

// Closed-form family invariant at a complex point; digits >= 20. Raises
// IndeterminateError when the denominator interval touches zero.
CBall numeric_closed_form(families::ClosedForm f, const CBall& s, const CBall& t,
                          unsigned digits);

}  // namespace curvex

#endif
