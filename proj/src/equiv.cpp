#include "curvex/equiv.hpp"

#include <stdexcept>
#include <utility>

namespace curvex {

namespace {

// Extra working digits beyond the requested decision precision.
constexpr unsigned kGuardDigits = 30;

std::string ratfn_str(const InvariantValue& v) {
    return v.defined ? v.value.str() : "undefined";
}

WitnessEntry exact_entry(const InvariantValue& a, const InvariantValue& b) {
    WitnessEntry e;
    e.name = a.name;
    e.lhs = ratfn_str(a);
    e.rhs = ratfn_str(b);
    e.matched = a.defined && b.defined && a.value == b.value;
    return e;
}

EquivalenceVerdict exact_verdict(std::vector<WitnessEntry> witness) {
    EquivalenceVerdict v;
    v.mode = EquivMode::exact;
    v.equivalent = true;
    for (const WitnessEntry& e : witness) v.equivalent = v.equivalent && e.matched;
    v.witness = std::move(witness);
    return v;
}

void require_square_free(const BinaryForm& q, const char* who) {
    if (!is_square_free(q)) throw std::domain_error(std::string(who) + ": form is not square-free");
}

// Upper bound on the distance between two rectangles, coordinate-wise.
Mpfr upper_gap(const CBall& a, const CBall& b) {
    Mpfr gr = abs(a.re.mid - b.re.mid) + a.re.rad + b.re.rad;
    Mpfr gi = abs(a.im.mid - b.im.mid) + a.im.rad + b.im.rad;
    return gr > gi ? gr : gi;
}

WitnessEntry numeric_entry(const std::string& name, const CBall& a, const CBall& b) {
    WitnessEntry e;
    e.name = name;
    e.lhs = a.str();
    e.rhs = b.str();
    e.matched = overlap(a, b);
    Mpfr g = e.matched ? upper_gap(a, b) : a.gap(b);
    e.gap = g.str(3, std::ios_base::scientific);
    return e;
}

CBall as_ball(const ParamValue& p) {
    if (const Rat* r = std::get_if<Rat>(&p)) return CBall::from_rat(*r);
    return refreshed(std::get<CBall>(p));
}

bool any_numeric(std::initializer_list<const ParamValue*> ps) {
    for (const ParamValue* p : ps)
        if (std::holds_alternative<CBall>(*p)) return true;
    return false;
}

CBall ball_of_rat(const Rat& r) { return CBall::from_rat(r); }

}  // namespace

EquivalenceVerdict equivalent_quartics(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != 4 || b.degree() != 4)
        throw std::domain_error("equivalent_quartics: degree must be 4");
    require_square_free(a, "equivalent_quartics");
    require_square_free(b, "equivalent_quartics");
    QuarticInvariants ia = quartic_invariants(a);
    QuarticInvariants ib = quartic_invariants(b);
    return exact_verdict({exact_entry(ia.J, ib.J)});
}

EquivalenceVerdict equivalent_quintics(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != 5 || b.degree() != 5)
        throw std::domain_error("equivalent_quintics: degree must be 5");
    require_square_free(a, "equivalent_quintics");
    require_square_free(b, "equivalent_quintics");
    QuinticInvariants ia = quintic_invariants(a);
    QuinticInvariants ib = quintic_invariants(b);
    return exact_verdict(
        {exact_entry(ia.J, ib.J), exact_entry(ia.K, ib.K), exact_entry(ia.L, ib.L)});
}

EquivalenceVerdict germ_equiv_family_t(int n, const ParamValue& t1, const ParamValue& t2,
                                       unsigned digits) {
    if (n < 4) throw std::domain_error("germ_equiv_family_t: n must be at least 4");
    if (!any_numeric({&t1, &t2})) {
        const Rat& a = std::get<Rat>(t1);
        const Rat& b = std::get<Rat>(t2);
        auto admissible = [n](const Rat& t) {
            return Rat(int_pow(Int(1 - n), static_cast<unsigned long>(n - 1))) * rat_pow(t, n) +
                       Rat(int_pow(Int(n), static_cast<unsigned long>(n))) !=
                   0;
        };
        if (!admissible(a) || !admissible(b))
            throw std::domain_error("germ_equiv_family_t: parameter on the discriminant locus");
        WitnessEntry e;
        e.name = "t^n";
        e.lhs = rat_str(rat_pow(a, n));
        e.rhs = rat_str(rat_pow(b, n));
        e.matched = rat_pow(a, n) == rat_pow(b, n);
        return exact_verdict({e});
    }
    PrecisionGuard guard(digits + kGuardDigits);
    CBall a = as_ball(t1);
    CBall b = as_ball(t2);
    auto mk = ball_of_rat;
    for (const CBall* t : {&a, &b})
        if (families::delta_family_t(n, *t, mk).contains_zero())
            throw IndeterminateError(
                "germ_equiv_family_t: parameter undecidably close to the discriminant locus");
    EquivalenceVerdict v;
    v.mode = EquivMode::numeric;
    v.digits = digits;
    v.witness.push_back(numeric_entry("t^n", a.pow_int(n), b.pow_int(n)));
    v.equivalent = v.witness[0].matched;
    return v;
}

EquivalenceVerdict germ_equiv_family_st(const ParamValue& s1, const ParamValue& t1,
                                        const ParamValue& s2, const ParamValue& t2,
                                        unsigned digits) {
    using families::ClosedForm;
    static const ClosedForm forms[] = {ClosedForm::j, ClosedForm::k, ClosedForm::l};
    static const char* names[] = {"j", "k", "l"};
    if (!any_numeric({&s1, &t1, &s2, &t2})) {
        const Rat& sa = std::get<Rat>(s1);
        const Rat& ta = std::get<Rat>(t1);
        const Rat& sb = std::get<Rat>(s2);
        const Rat& tb = std::get<Rat>(t2);
        std::vector<WitnessEntry> witness;
        for (int i = 0; i < 3; ++i) {
            auto va = families::closed_form_rat(forms[i], sa, ta);
            auto vb = families::closed_form_rat(forms[i], sb, tb);
            if (!va || !vb)
                throw std::domain_error(
                    "germ_equiv_family_st: parameter on the discriminant locus");
            WitnessEntry e;
            e.name = names[i];
            e.lhs = rat_str(*va);
            e.rhs = rat_str(*vb);
            e.matched = *va == *vb;
            witness.push_back(std::move(e));
        }
        return exact_verdict(std::move(witness));
    }
    PrecisionGuard guard(digits + kGuardDigits);
    CBall sa = as_ball(s1);
    CBall ta = as_ball(t1);
    CBall sb = as_ball(s2);
    CBall tb = as_ball(t2);
    EquivalenceVerdict v;
    v.mode = EquivMode::numeric;
    v.digits = digits;
    v.equivalent = true;
    for (int i = 0; i < 3; ++i) {
        auto [na, da] = families::closed_form_parts(forms[i], sa, ta, ball_of_rat);
        auto [nb, db] = families::closed_form_parts(forms[i], sb, tb, ball_of_rat);
        if (da.contains_zero() || db.contains_zero())
            throw IndeterminateError(
                "germ_equiv_family_st: parameter undecidably close to the discriminant locus");
        WitnessEntry e = numeric_entry(names[i], na / da, nb / db);
        v.equivalent = v.equivalent && e.matched;
        v.witness.push_back(std::move(e));
    }
    return v;
}

CBall numeric_closed_form(families::ClosedForm f, const CBall& s, const CBall& t,
                          unsigned digits) {
    if (digits < 20) throw std::invalid_argument("numeric_closed_form: digits must be >= 20");
    PrecisionGuard guard(digits + kGuardDigits);
    CBall sr = refreshed(s);
    CBall tr = refreshed(t);
    auto [num, den] = families::closed_form_parts(f, sr, tr, ball_of_rat);
    if (den.contains_zero())
        throw IndeterminateError("numeric_closed_form: denominator interval touches zero");
    return num / den;
}

}  // namespace curvex
