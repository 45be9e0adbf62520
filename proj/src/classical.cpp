#include "curvex/classical.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "curvex/families.hpp"
#include "curvex/linalg.hpp"

namespace curvex {

namespace {

// Full transvectants have order zero; the value is the single coefficient.
Poly scalar_transvectant(const BinaryForm& p, const BinaryForm& s, int r) {
    return transvectant(p, s, r).coeff(0);
}

InvariantValue make_ratio(std::string name, Poly num, Poly den) {
    InvariantValue out;
    out.name = std::move(name);
    out.defined = !den.is_zero();
    if (out.defined) out.value = RatFn(std::move(num), std::move(den));
    return out;
}

}  // namespace

InvariantValue inv_J(const BinaryForm& q) {
    int n = q.degree();
    if (n < 3) throw std::domain_error("inv_J: degree must be at least 3");
    Poly num;
    if (n % 2 == 0) {
        num = scalar_transvectant(q, q, n).pow(static_cast<unsigned>(n - 1));
    } else {
        BinaryForm sq = q * q;
        num = scalar_transvectant(sq, sq, 2 * n).pow(static_cast<unsigned>((n - 1) / 2));
    }
    return make_ratio("J", std::move(num), discriminant(q));
}

InvariantValue inv_M(const BinaryForm& q) {
    int n = q.degree();
    if (n < 4 || n % 2 != 0) throw std::domain_error("inv_M: degree must be even and at least 4");
    BinaryForm h = hessian(q);
    Poly num = scalar_transvectant(h, h, 2 * (n - 2));
    Poly t = scalar_transvectant(q, q, n);
    return make_ratio("M", std::move(num), t * t);
}

QuarticInvariants quartic_invariants(const BinaryForm& q) {
    if (q.degree() != 4) throw std::domain_error("quartic_invariants: degree must be 4");
    std::vector<Poly> a;
    for (int i = 0; i <= 4; ++i) a.push_back(q.abin(i));
    QuarticInvariants out;
    out.I2 = a[0] * a[4] - 4 * (a[1] * a[3]) + 3 * (a[2] * a[2]);
    out.I3 = det_fraction_free({{a[4], a[3], a[2]}, {a[3], a[2], a[1]}, {a[2], a[1], a[0]}});
    Poly i2cube = out.I2.pow(3);
    Poly i3sq27 = 27 * (out.I3 * out.I3);
    out.delta = i2cube - i3sq27;
    out.J = make_ratio("J", i2cube, out.delta);
    out.K = make_ratio("K", i2cube, i3sq27);
    return out;
}

BinaryForm canonizant(const BinaryForm& q) {
    if (q.degree() != 5) throw std::domain_error("canonizant: degree must be 5");
    Poly z = Poly::variable("z");
    Poly w = Poly::variable("w");
    PolyMatrix m(3, std::vector<Poly>(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = q.abin(5 - r - c) * z + q.abin(4 - r - c) * w;
    Poly det = det_fraction_free(m);
    if (det.is_zero()) return BinaryForm::zero(3);
    return BinaryForm::from_poly(det, "z", "w");
}

QuinticInvariants quintic_invariants(const BinaryForm& q) {
    if (q.degree() != 5) throw std::domain_error("quintic_invariants: degree must be 5");
    BinaryForm sq = q * q;
    Poly n10 = scalar_transvectant(sq, sq, 10);
    QuinticInvariants out;
    out.I4 = Rat(Int(1), Int(7200000) * factorial(10)) * n10;
    out.delta = discriminant(q);
    out.I8 = Rat(1, 128) * (out.I4 * out.I4 - out.delta);
    out.I12 = Rat(-27) * discriminant(canonizant(q));
    out.J = make_ratio("J", n10 * n10, out.delta);
    out.K = make_ratio("K", out.I12 * out.I12, out.delta.pow(3));
    out.L = make_ratio("L", n10 * out.I12, out.delta * out.delta);
    return out;
}

std::optional<Rat> verify_i18_square(const BinaryForm& q) {
    if (q.degree() != 5) throw std::domain_error("verify_i18_square: degree must be 5");
    if (!q.has_rational_coeffs())
        throw std::invalid_argument("verify_i18_square: coefficients must be rational");
    QuinticInvariants inv = quintic_invariants(q);
    Rat i4 = inv.I4.constant_value();
    Rat i8 = inv.I8.constant_value();
    Rat i12 = inv.I12.constant_value();
    Rat rhs = i4 * rat_pow(i8, 4) + 8 * rat_pow(i8, 3) * i12 -
              2 * i4 * i4 * i8 * i8 * i12 - 72 * i4 * i8 * i12 * i12 -
              432 * rat_pow(i12, 3) + rat_pow(i4, 3) * i12 * i12;
    return rat_sqrt_exact(rhs / 16);
}

namespace {

struct SexticBasis {
    Poly I2;
    Poly B, C, D;
    std::array<Poly, 6> deg10;
};

SexticBasis sextic_basis(const BinaryForm& q) {
    SexticBasis out;
    out.I2 = Rat(1, 518400) * scalar_transvectant(q, q, 6);  // (6!)^2 = 518400
    BinaryForm i = transvectant(q, q, 4);
    out.B = scalar_transvectant(i, i, 4);
    BinaryForm l = transvectant(q, i, 4);
    out.C = scalar_transvectant(l, l, 2);
    BinaryForm m = transvectant(i, l, 2);
    out.D = scalar_transvectant(m, m, 2);
    out.deg10 = {out.I2.pow(5),          out.I2.pow(3) * out.B, out.I2 * (out.B * out.B),
                 out.I2 * out.I2 * out.C, out.B * out.C,         out.D};
    return out;
}

SexticCalibrationOutcome run_calibration() {
    using families::ClosedForm;
    SexticCalibrationOutcome out;

    RatMatrix rows_ab;
    std::vector<Rat> rhs_ab;
    RatMatrix rows_g;
    std::vector<Rat> rhs_g;
    for (int si = 1; si <= 6 && out.samples < 20; ++si) {
        for (int ti = 1; ti <= 6 && out.samples < 20; ++ti) {
            Rat s(si), t(ti);
            auto bj = families::closed_form_rat(ClosedForm::bj, s, t);
            auto bl = families::closed_form_rat(ClosedForm::bl, s, t);
            if (!bj || !bl || *bj == 0) continue;
            SexticBasis basis = sextic_basis(families::family_st_associated_at(s, t));
            Rat i2 = basis.I2.constant_value();
            if (i2 == 0) continue;
            // bj = (3/5) I2^2 / E pins E, hence I4 = (I2^2 - E)/2.
            Rat e = Rat(3, 5) * i2 * i2 / *bj;
            rows_ab.push_back({i2 * i2, basis.B.constant_value()});
            rhs_ab.push_back((i2 * i2 - e) / 2);
            // bl = 675 I2 I10 / E^3 pins I10.
            std::vector<Rat> row;
            for (const Poly& p : basis.deg10) row.push_back(p.constant_value());
            rows_g.push_back(std::move(row));
            rhs_g.push_back(*bl * rat_pow(e, 3) / (675 * i2));
            ++out.samples;
        }
    }
    if (out.samples < 10) {
        out.details = "too few usable sample points";
        return out;
    }
    LinearSolution ab = solve_linear(rows_ab, rhs_ab);
    if (!ab.consistent || !ab.unique) {
        out.details = ab.consistent ? "I4 system underdetermined" : "I4 system inconsistent";
        return out;
    }
    // The degree-10 system is solved over a two-parameter sample family, so it
    // is consistent but not full rank; any two solutions differ by an invariant
    // that vanishes identically on that family. The canonical particular
    // solution (free variables zero) is taken as the representative.
    LinearSolution g = solve_linear(rows_g, rhs_g);
    if (!g.consistent) {
        out.details = "I10 system inconsistent";
        return out;
    }
    out.ok = true;
    out.values.alpha = ab.x[0];
    out.values.beta = ab.x[1];
    for (std::size_t k = 0; k < 6; ++k) out.values.gamma[k] = g.x[k];
    out.details = "exact solve, zero residual";
    if (!g.unique) {
        out.details += "; I10 solution space has dimension " + std::to_string(6 - g.rank) +
                       " on the sample family";
    }
    return out;
}

}  // namespace

const SexticCalibrationOutcome& try_sextic_calibration() {
    static const SexticCalibrationOutcome out = run_calibration();
    return out;
}

const SexticCalibration& sextic_calibration() {
    const SexticCalibrationOutcome& o = try_sextic_calibration();
    if (!o.ok) throw std::logic_error("sextic calibration failed: " + o.details);
    return o.values;
}

SexticInvariants sextic_invariants(const BinaryForm& q) {
    if (q.degree() != 6) throw std::domain_error("sextic_invariants: degree must be 6");
    const SexticCalibration& cal = sextic_calibration();
    SexticBasis basis = sextic_basis(q);
    SexticInvariants out;
    out.I2 = basis.I2;
    out.I4 = cal.alpha * basis.I2.pow(2) + cal.beta * basis.B;
    out.I10 = Poly();
    for (std::size_t k = 0; k < 6; ++k) out.I10 += cal.gamma[k] * basis.deg10[k];
    Poly e = basis.I2.pow(2) - 2 * out.I4;
    out.J = make_ratio("J", Rat(3, 5) * (basis.I2 * basis.I2), e);
    out.K = make_ratio("K", Rat(759375) * (out.I10 * out.I10), e.pow(5));
    out.L = make_ratio("L", Rat(675) * (basis.I2 * out.I10), e.pow(3));
    return out;
}

}  // namespace curvex
