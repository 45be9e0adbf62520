#ifndef CURVEX_FAMILIES_HPP
#define CURVEX_FAMILIES_HPP

#include <span>

#include "curvex/binary_form.hpp"
#include "curvex/poly.hpp"
#include "curvex/rational.hpp"

namespace curvex::families {

// The parametric families under study. Parameters are the polynomial
// variables "s" and "t"; *_at variants bind them to rationals.

// z^n + t z^(n-1) w + w^n, n >= 3.
BinaryForm family_t(int n);
BinaryForm family_t_at(int n, const Rat& t);

// z^5 + s z^4 w + t z^3 w^2 + w^5.
BinaryForm family_st();
BinaryForm family_st_at(const Rat& s, const Rat& t);

// t * (z^5 + 5t z^4 w + (5/t) z w^4 + w^5), denominator-cleared; t != 0 at
// evaluation. Swapping z and w sends parameter t to 1/t.
BinaryForm reciprocal_quintic();
BinaryForm reciprocal_quintic_at(const Rat& t);

// t(1-t) * (z^5/t + w^5/(1-t) + (z+w)^5), denominator-cleared; t != 0, 1 at
// evaluation. Swapping z and w sends t to 1-t.
BinaryForm three_power_quintic();
BinaryForm three_power_quintic_at(const Rat& t);

// z^4 + t z^2 w^2 + w^4 (square-free for t != +-2).
BinaryForm diagonal_quartic();
BinaryForm diagonal_quartic_at(const Rat& t);

// t z^4 - 12 z^2 w^2 + t w^4, the quartic dual to diagonal_quartic.
BinaryForm dual_diagonal_quartic();
BinaryForm dual_diagonal_quartic_at(const Rat& t);

// Degree-2(n-2) form proportional to every form associated to family_t(n):
//   sum_{j=n-1}^{2(n-2)} C(2(n-2),j) u^(j+2-n) Z1^j Z2^(2(n-2)-j)
//   + ((n-1)t^2/n^2) sum_{j=n-1}^{2(n-2)} C(2(n-2),j) u^(2(n-2)-j) Z1^(2(n-2)-j) Z2^j
//   + C(2(n-2),n-2) Z1^(n-2) Z2^(n-2),           u := (1-n)t/n.
// Requires n >= 4.
BinaryForm family_t_associated(int n);
BinaryForm family_t_associated_at(int n, const Rat& t);

// The sextic proportional to every form associated to family_st().
BinaryForm family_st_associated();
BinaryForm family_st_associated_at(const Rat& s, const Rat& t);

// Integer polynomial tables behind the closed-form family invariants.
struct TableTerm {
    long long c;
    int es, et;
};

enum class Table {
    den5,      // 256s^5 - 1600s^3 t - 27s^2 t^4 + 2250s t^2 + 108t^5 + 3125
    i12num,    // 19200s^6 t^2 - 160000s^4 t^3 - 1120s^3 t^6 + 440000s^2 t^4
               //   + 3600s t^7 + 27t^10 - 400000t^5
    jfactor,   // 125 - 3s t^2
    bigF,      // the degree-(6,10) polynomial F(s,t)
};

std::span<const TableTerm> table(Table which);

template <class S, class Maker>
S eval_table(Table which, const S& s, const S& t, Maker mk) {
    S acc = mk(Rat(0));
    for (const TableTerm& term : table(which)) {
        S v = mk(Rat(term.c));
        for (int k = 0; k < term.es; ++k) v = v * s;
        for (int k = 0; k < term.et; ++k) v = v * t;
        acc = acc + v;
    }
    return acc;
}

// Closed-form invariant values of the two quintic families, transcribed
// literally. Lowercase j,k,l belong to family_st; bj,bk,bl are the sextic
// absolute invariants of its associated form; bigF is the polynomial tying
// them together; delta_st is the family_st discriminant.
enum class ClosedForm { j, k, l, bj, bk, bl, bigF, delta_st };

Rat closed_form_scale(ClosedForm f);   // rational prefactor on the numerator
int closed_form_den_power(ClosedForm f);

// Numerator/denominator before division: num = scale * (first table value) *
// (optional second table value), den = den5^den_power.
template <class S, class Maker>
std::pair<S, S> closed_form_parts(ClosedForm f, const S& s, const S& t, Maker mk) {
    S den5 = eval_table(Table::den5, s, t, mk);
    S jf = eval_table(Table::jfactor, s, t, mk);
    S num = mk(Rat(1));
    switch (f) {
        case ClosedForm::j:
        case ClosedForm::bj:
            num = jf * jf;
            break;
        case ClosedForm::k:
            num = eval_table(Table::i12num, s, t, mk);
            num = num * num;
            break;
        case ClosedForm::l:
            num = jf * eval_table(Table::i12num, s, t, mk);
            break;
        case ClosedForm::bk:
            num = eval_table(Table::bigF, s, t, mk);
            num = num * num;
            break;
        case ClosedForm::bl:
            num = jf * eval_table(Table::bigF, s, t, mk);
            break;
        case ClosedForm::bigF:
            num = eval_table(Table::bigF, s, t, mk);
            break;
        case ClosedForm::delta_st:
            num = den5;
            break;
    }
    num = mk(closed_form_scale(f)) * num;
    S den = mk(Rat(1));
    for (int k = 0; k < closed_form_den_power(f); ++k) den = den * den5;
    return {std::move(num), std::move(den)};
}

// Discriminant of family_t(n): (1-n)^(n-1) t^n / n^n + 1.
template <class S, class Maker>
S delta_family_t(int n, const S& t, Maker mk) {
    Rat lead(int_pow(Int(1 - n), static_cast<unsigned long>(n - 1)),
             int_pow(Int(n), static_cast<unsigned long>(n)));
    S tn = mk(Rat(1));
    for (int k = 0; k < n; ++k) tn = tn * t;
    return mk(lead) * tn + mk(Rat(1));
}

// Exact evaluation; nullopt when the denominator vanishes.
std::optional<Rat> closed_form_rat(ClosedForm f, const Rat& s, const Rat& t);
// Symbolic num/den pair in variables s, t.
std::pair<Poly, Poly> closed_form_sym(ClosedForm f);

}  // namespace curvex::families

#endif
