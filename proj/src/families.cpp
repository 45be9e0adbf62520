#include "curvex/families.hpp"

#include <stdexcept>

namespace curvex::families {

namespace {

Poly tvar() { return Poly::variable("t"); }
Poly svar() { return Poly::variable("s"); }

BinaryForm sparse_form(int degree, std::vector<std::pair<int, Poly>> entries) {
    std::vector<Poly> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& [i, c] : entries) coeffs[static_cast<std::size_t>(i)] = std::move(c);
    return BinaryForm(degree, std::move(coeffs));
}

Poly table_poly(Table which) {
    Poly s = svar();
    Poly t = tvar();
    return eval_table(which, s, t, [](const Rat& r) { return Poly(r); });
}

}  // namespace

BinaryForm family_t(int n) {
    if (n < 3) throw std::domain_error("family_t: degree must be at least 3");
    return sparse_form(n, {{n, Poly(1)}, {n - 1, tvar()}, {0, Poly(1)}});
}

BinaryForm family_t_at(int n, const Rat& t) {
    return family_t(n).evaluated_params({{"t", t}});
}

BinaryForm family_st() {
    return sparse_form(5, {{5, Poly(1)}, {4, svar()}, {3, tvar()}, {0, Poly(1)}});
}

BinaryForm family_st_at(const Rat& s, const Rat& t) {
    return family_st().evaluated_params({{"s", s}, {"t", t}});
}

BinaryForm reciprocal_quintic() {
    Poly t = tvar();
    return sparse_form(5, {{5, t}, {4, 5 * (t * t)}, {1, Poly(5)}, {0, t}});
}

BinaryForm reciprocal_quintic_at(const Rat& t) {
    if (t == 0) throw std::domain_error("reciprocal_quintic_at: t must be nonzero");
    return reciprocal_quintic().evaluated_params({{"t", t}});
}

BinaryForm three_power_quintic() {
    Poly t = tvar();
    Poly mix = t - t * t;  // t(1-t)
    std::vector<std::pair<int, Poly>> entries;
    entries.emplace_back(5, Poly(1) - t * t);
    entries.emplace_back(0, 2 * t - t * t);
    for (int i = 1; i <= 4; ++i) entries.emplace_back(i, Rat(binomial(5, i)) * mix);
    return sparse_form(5, std::move(entries));
}

BinaryForm three_power_quintic_at(const Rat& t) {
    if (t == 0 || t == 1) throw std::domain_error("three_power_quintic_at: t must avoid 0 and 1");
    return three_power_quintic().evaluated_params({{"t", t}});
}

BinaryForm diagonal_quartic() {
    return sparse_form(4, {{4, Poly(1)}, {2, tvar()}, {0, Poly(1)}});
}

BinaryForm diagonal_quartic_at(const Rat& t) {
    return diagonal_quartic().evaluated_params({{"t", t}});
}

BinaryForm dual_diagonal_quartic() {
    return sparse_form(4, {{4, tvar()}, {2, Poly(-12)}, {0, tvar()}});
}

BinaryForm dual_diagonal_quartic_at(const Rat& t) {
    return dual_diagonal_quartic().evaluated_params({{"t", t}});
}

BinaryForm family_t_associated(int n) {
    if (n < 4) throw std::domain_error("family_t_associated: degree must be at least 4");
    int nu = 2 * (n - 2);
    Poly t = tvar();
    Rat uscale(1 - n, n);  // u = uscale * t
    std::vector<Poly> coeffs(static_cast<std::size_t>(nu) + 1);
    auto upow = [&](int e) {
        Poly p(rat_pow(uscale, e));
        for (int k = 0; k < e; ++k) p *= t;
        return p;
    };
    for (int j = n - 1; j <= nu; ++j) {
        Rat binom(binomial(static_cast<unsigned>(nu), static_cast<unsigned>(j)));
        coeffs[static_cast<std::size_t>(j)] = binom * upow(j + 2 - n);
        coeffs[static_cast<std::size_t>(nu - j)] =
            Rat(Int(n - 1), int_pow(Int(n), 2)) * binom * (t * t * upow(nu - j));
    }
    coeffs[static_cast<std::size_t>(n - 2)] =
        Poly(Rat(binomial(static_cast<unsigned>(nu), static_cast<unsigned>(n - 2))));
    return BinaryForm(nu, std::move(coeffs));
}

BinaryForm family_t_associated_at(int n, const Rat& t) {
    return family_t_associated(n).evaluated_params({{"t", t}});
}

namespace {

// One coefficient of the associated sextic, from (c, s-exp, t-exp) triples.
Poly st_poly(std::initializer_list<TableTerm> terms) {
    Poly s = svar();
    Poly t = tvar();
    Poly acc;
    for (const TableTerm& term : terms) {
        Poly v{Rat(term.c)};
        for (int k = 0; k < term.es; ++k) v *= s;
        for (int k = 0; k < term.et; ++k) v *= t;
        acc += v;
    }
    return acc;
}

}  // namespace

BinaryForm family_st_associated() {
    std::vector<Poly> coeffs(7);
    coeffs[6] = st_poly({{160, 3, 0}, {-300, 1, 1}, {-27, 0, 4}});
    coeffs[5] = st_poly({{-1200, 2, 0}, {81, 1, 3}, {1125, 0, 1}});
    coeffs[4] = st_poly({{-270, 2, 2}, {3750, 1, 0}, {675, 0, 3}});
    coeffs[3] = st_poly({{480, 3, 1}, {-1650, 1, 2}, {-6250, 0, 0}});
    coeffs[2] = st_poly({{-480, 4, 0}, {2100, 2, 1}, {-1125, 0, 2}});
    coeffs[1] = st_poly({{240, 3, 0}, {27, 2, 3}, {-825, 1, 1}, {-108, 0, 4}});
    coeffs[0] = st_poly({{-6, 3, 2}, {-50, 2, 0}, {24, 1, 3}, {125, 0, 1}});
    return BinaryForm(6, std::move(coeffs));
}

BinaryForm family_st_associated_at(const Rat& s, const Rat& t) {
    return family_st_associated().evaluated_params({{"s", s}, {"t", t}});
}

std::span<const TableTerm> table(Table which) {
    static const TableTerm den5[] = {
        {256, 5, 0}, {-1600, 3, 1}, {-27, 2, 4}, {2250, 1, 2}, {108, 0, 5}, {3125, 0, 0},
    };
    static const TableTerm i12num[] = {
        {19200, 6, 2}, {-160000, 4, 3}, {-1120, 3, 6}, {440000, 2, 4},
        {3600, 1, 7},  {27, 0, 10},     {-400000, 0, 5},
    };
    static const TableTerm jfactor[] = {
        {125, 0, 0}, {-3, 1, 2},
    };
    static const TableTerm bigF[] = {
        {163200, 6, 2},   {14800000, 5, 0},  {-2100000, 4, 3}, {5400, 3, 6},
        {-92500000, 3, 1}, {7425000, 2, 4},  {-52650, 1, 7},   {116250000, 1, 2},
        {729, 0, 10},     {-4556250, 0, 5},  {312500000, 0, 0},
    };
    switch (which) {
        case Table::den5: return den5;
        case Table::i12num: return i12num;
        case Table::jfactor: return jfactor;
        case Table::bigF: return bigF;
    }
    throw std::logic_error("table: unknown selector");
}

Rat closed_form_scale(ClosedForm f) {
    static const Rat jscale = Rat(5) * rat_pow(Rat(Int(1440000) * factorial(10)), 2);
    switch (f) {
        case ClosedForm::j: return jscale;
        case ClosedForm::k: return Rat(Int(1), Int(1048576) * 3125);  // 1 / (2^20 5^5)
        case ClosedForm::l: return Rat(Int(-225) * factorial(10), Int(4));
        case ClosedForm::bj:
        case ClosedForm::bk:
        case ClosedForm::bl:
        case ClosedForm::bigF: return Rat(1);
        case ClosedForm::delta_st: return Rat(1, 3125);
    }
    throw std::logic_error("closed_form_scale: unknown selector");
}

int closed_form_den_power(ClosedForm f) {
    switch (f) {
        case ClosedForm::j: return 1;
        case ClosedForm::k: return 3;
        case ClosedForm::l: return 2;
        case ClosedForm::bj: return 1;
        case ClosedForm::bk: return 3;
        case ClosedForm::bl: return 2;
        case ClosedForm::bigF: return 0;
        case ClosedForm::delta_st: return 0;
    }
    throw std::logic_error("closed_form_den_power: unknown selector");
}

std::optional<Rat> closed_form_rat(ClosedForm f, const Rat& s, const Rat& t) {
    auto [num, den] = closed_form_parts(f, s, t, [](const Rat& r) { return r; });
    if (den == 0) return std::nullopt;
    return num / den;
}

std::pair<Poly, Poly> closed_form_sym(ClosedForm f) {
    return closed_form_parts(f, svar(), tvar(), [](const Rat& r) { return Poly(r); });
}

}  // namespace curvex::families
