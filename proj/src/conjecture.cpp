#include "curvex/conjecture.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "curvex/equiv.hpp"
#include "curvex/linalg.hpp"

namespace curvex::conjecture {

namespace {

using families::ClosedForm;

RatFn sym(ClosedForm f) {
    auto [num, den] = families::closed_form_sym(f);
    return RatFn(std::move(num), std::move(den));
}

Poly scalar_tv(const BinaryForm& p, const BinaryForm& s, int r) {
    return transvectant(p, s, r).coeff(0);
}

Rat eval_t(const Poly& p, const Rat& t) {
    if (p.is_constant()) return p.constant_value();
    return p.evaluate({{"t", t}});
}

Rat get_constant(const CalibrationResult& c, const std::string& name) {
    for (const auto& [k, v] : c.constants)
        if (k == name) return v;
    throw std::logic_error("missing constant " + name);
}

std::string decimal_str(Rat v, int digits) {
    std::string s;
    if (v < 0) {
        s += "-";
        v = -v;
    }
    Int ip = rat_num(v) / rat_den(v);
    s += ip.str();
    v -= Rat(ip);
    s += ".";
    for (int i = 0; i < digits; ++i) {
        v *= 10;
        Int d = rat_num(v) / rat_den(v);
        s += d.str();
        v -= Rat(d);
    }
    return s;
}

}  // namespace

EvidenceReport check_quartic_duality(const std::vector<Rat>& ts) {
    EvidenceReport rep;
    rep.name = "quartic duality";
    QuarticInvariants prim = quartic_invariants(families::diagonal_quartic());
    QuarticInvariants dual = quartic_invariants(families::dual_diagonal_quartic());
    bool ok = prim.J.defined && dual.K.defined && prim.J.value == dual.K.value;
    for (const Rat& t : ts) {
        if (t == 0 || t == 2 || t == -2 || t == 6 || t == -6) continue;
        QuarticInvariants a = quartic_invariants(families::diagonal_quartic_at(t));
        QuarticInvariants b = quartic_invariants(families::dual_diagonal_quartic_at(t));
        ok = ok && a.J.defined && b.K.defined && a.J.value == b.K.value;
        ++rep.samples;
    }
    rep.verified = ok;
    rep.details = ok ? "K of the dual quartic equals J of the primal, identically in t"
                     : "duality identity failed";
    return rep;
}

CalibrationResult calibrate_sextics() {
    CalibrationResult out;
    const SexticCalibrationOutcome& cal = try_sextic_calibration();
    out.details = cal.details;
    if (!cal.ok) return out;
    out.constants.emplace_back("alpha", cal.values.alpha);
    out.constants.emplace_back("beta", cal.values.beta);
    for (int k = 0; k < 6; ++k)
        out.constants.emplace_back("gamma" + std::to_string(k), cal.values.gamma[k]);
    // Held-out points, disjoint from the 1..6 square used by the solve.
    static const std::pair<int, int> raw[] = {
        {-1, 1}, {-2, 1}, {-1, 2}, {-3, 2}, {7, 1},  {8, 3},  {-5, 3}, {9, 2},
        {-4, 1}, {11, 5}, {-7, 4}, {-2, -2}, {3, -4}, {-6, 5}, {13, 7}, {1, -3},
        {7, 5},  {10, 3}, {-8, 3}, {12, 7}, {9, 4},  {-9, 2}, {8, 1},  {-3, -5},
    };
    bool ok = true;
    for (const auto& [si, ti] : raw) {
        if (out.samples >= 20) break;
        Rat s(si), t(ti);
        auto bj = families::closed_form_rat(ClosedForm::bj, s, t);
        auto bk = families::closed_form_rat(ClosedForm::bk, s, t);
        auto bl = families::closed_form_rat(ClosedForm::bl, s, t);
        if (!bj || !bk || !bl) continue;
        SexticInvariants six = sextic_invariants(families::family_st_associated_at(s, t));
        ok = ok && six.J.defined && six.K.defined && six.L.defined &&
             six.J.value == RatFn(*bj) && six.K.value == RatFn(*bk) &&
             six.L.value == RatFn(*bl);
        ++out.samples;
    }
    out.ok = ok && out.samples >= 20;
    if (out.ok) out.details += "; matches the closed forms at 20 held-out points";
    else if (cal.ok) out.details += "; held-out validation failed";
    return out;
}

CalibrationResult fit_connections() {
    CalibrationResult out;
    const Rat kscale = Rat(Int(1048576) * 729 * 3125);  // 2^20 3^6 5^5
    const Rat lscale = Rat(Int(-12), Int(25) * factorial(10));
    static const std::pair<int, int> pts[] = {
        {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3},
        {3, 2}, {-1, 1}, {1, -1}, {4, 1}, {1, 4}, {-1, 2},
    };
    RatMatrix rows_k;
    std::vector<Rat> rhs_k;
    RatMatrix rows_l;
    std::vector<Rat> rhs_l;
    for (const auto& [si, ti] : pts) {
        Rat s(si), t(ti);
        auto j = families::closed_form_rat(ClosedForm::j, s, t);
        auto k = families::closed_form_rat(ClosedForm::k, s, t);
        auto l = families::closed_form_rat(ClosedForm::l, s, t);
        auto bk = families::closed_form_rat(ClosedForm::bk, s, t);
        auto bl = families::closed_form_rat(ClosedForm::bl, s, t);
        if (!j) continue;
        rows_k.push_back({*l, *j * *l, rat_pow(*j, 3), rat_pow(*j, 2), *j});
        rhs_k.push_back(*bk - kscale * *k);
        rows_l.push_back({rat_pow(*j, 2), *j});
        rhs_l.push_back(*bl - lscale * *l);
        ++out.samples;
    }
    LinearSolution solk = solve_linear(rows_k, rhs_k);
    LinearSolution soll = solve_linear(rows_l, rhs_l);
    if (!solk.consistent || !solk.unique || !soll.consistent || !soll.unique) {
        out.details = "connection fit is not uniquely solvable";
        return out;
    }
    for (int i = 0; i < 5; ++i)
        out.constants.emplace_back("c" + std::to_string(i + 1), solk.x[static_cast<std::size_t>(i)]);
    out.constants.emplace_back("c6", soll.x[0]);
    out.constants.emplace_back("c7", soll.x[1]);
    // Prove both identities as rational functions of s, t.
    RatFn j = sym(ClosedForm::j), k = sym(ClosedForm::k), l = sym(ClosedForm::l);
    RatFn rhs1 = RatFn(kscale) * k + RatFn(solk.x[0]) * l + RatFn(solk.x[1]) * (j * l) +
                 RatFn(solk.x[2]) * j.pow(3) + RatFn(solk.x[3]) * j.pow(2) + RatFn(solk.x[4]) * j;
    RatFn rhs2 = RatFn(lscale) * l + RatFn(soll.x[0]) * j.pow(2) + RatFn(soll.x[1]) * j;
    bool ok1 = sym(ClosedForm::bk) == rhs1;
    bool ok2 = sym(ClosedForm::bl) == rhs2;
    out.ok = ok1 && ok2;
    out.details = out.ok ? "fitted exactly; both identities hold as rational functions"
                         : "fit succeeded but a symbolic identity failed";
    return out;
}

EvidenceReport check_connections() {
    CalibrationResult fit = fit_connections();
    EvidenceReport rep;
    rep.name = "sextic-to-quintic connections";
    rep.verified = fit.ok;
    rep.samples = fit.samples;
    rep.details = fit.details;
    if (!fit.ok) return rep;
    const Rat kscale = Rat(Int(1048576) * 729 * 3125);
    const Rat lscale = Rat(Int(-12), Int(25) * factorial(10));
    std::array<Rat, 7> c;
    for (int i = 0; i < 7; ++i) c[static_cast<std::size_t>(i)] = get_constant(fit, "c" + std::to_string(i + 1));
    // Spot-check with the fitted constants at held-out points.
    static const std::pair<int, int> pts[] = {
        {5, 1}, {1, 5}, {5, 2}, {2, 5}, {-2, 1}, {1, -2}, {6, 1}, {-3, 1}, {7, 2}, {3, -1},
        {4, 3}, {3, 4}, {-1, 4}, {5, 3}, {-4, 3}, {2, -3}, {8, 5}, {-5, 2}, {7, 3}, {11, 2},
    };
    bool ok = true;
    long extra = 0;
    for (const auto& [si, ti] : pts) {
        Rat s(si), t(ti);
        auto j = families::closed_form_rat(ClosedForm::j, s, t);
        if (!j) continue;
        Rat k = *families::closed_form_rat(ClosedForm::k, s, t);
        Rat l = *families::closed_form_rat(ClosedForm::l, s, t);
        Rat bk = *families::closed_form_rat(ClosedForm::bk, s, t);
        Rat bl = *families::closed_form_rat(ClosedForm::bl, s, t);
        ok = ok && bk == kscale * k + c[0] * l + c[1] * *j * l + c[2] * rat_pow(*j, 3) +
                       c[3] * rat_pow(*j, 2) + c[4] * *j;
        ok = ok && bl == lscale * l + c[5] * rat_pow(*j, 2) + c[6] * *j;
        ++extra;
    }
    rep.verified = ok;
    rep.samples += extra;
    if (!ok) rep.details += "; held-out spot checks failed";
    return rep;
}

CalibrationResult fit_ft_constants(int n) {
    if (n < 4) throw std::domain_error("fit_ft_constants: n must be at least 4");
    CalibrationResult out;
    Int nfac = factorial(static_cast<unsigned>(n));
    Rat big_n;
    if (n % 2 == 0) {
        big_n = rat_pow(Rat(2 * nfac * nfac), n - 1);
    } else {
        Int f2n = factorial(static_cast<unsigned>(2 * n));
        big_n = rat_pow(Rat(2 * f2n * (f2n - 2 * nfac * nfac)), (n - 1) / 2);
    }
    Rat mu = Rat(int_pow(Int(1 - n), static_cast<unsigned long>(n - 1)),
                 int_pow(Int(n), static_cast<unsigned long>(n))) /
             big_n;
    Rat nu = Rat(1) / big_n;
    out.constants.emplace_back("mu", mu);
    out.constants.emplace_back("nu", nu);

    Poly t = Poly::variable("t");
    auto mk = [](const Rat& r) { return Poly(r); };
    Poly d = families::delta_family_t(n, t, mk);
    InvariantValue jv = inv_J(families::family_t(n));
    Poly tn = t.pow(static_cast<unsigned>(n));
    bool okj = jv.defined && jv.value == RatFn(Poly(1), mu * tn + Poly(nu));

    // Full self-transvectant of the associated family is a multiple of the
    // family discriminant. The middle term of an order-2m self-transvectant
    // carries the parity sign (-1)^m with m = n-2, so the constant is negative
    // for odd n.
    BinaryForm assoc = families::family_t_associated(n);
    int m = 2 * (n - 2);
    Int mfac = factorial(static_cast<unsigned>(m));
    Rat a_const = Rat(mfac * mfac * binomial(static_cast<unsigned>(m), static_cast<unsigned>(n - 2)));
    if (n % 2 != 0) a_const = -a_const;
    bool oka = scalar_tv(assoc, assoc, m) == a_const * d;

    // (H, H) full transvectant = d^2 (rho d + sigma); fit at two points,
    // then prove the polynomial identity.
    BinaryForm h = hessian(assoc);
    Poly lhs = scalar_tv(h, h, 2 * (2 * n - 6));
    RatMatrix rows;
    std::vector<Rat> rhs;
    for (const Rat& tv : {Rat(1), Rat(2)}) {
        Rat dv = eval_t(d, tv);
        rows.push_back({rat_pow(dv, 3), rat_pow(dv, 2)});
        rhs.push_back(eval_t(lhs, tv));
    }
    LinearSolution sol = solve_linear(rows, rhs);
    if (!sol.consistent || !sol.unique) {
        out.details = "rho/sigma fit is not uniquely solvable";
        return out;
    }
    Rat rho = sol.x[0], sigma = sol.x[1];
    out.constants.emplace_back("rho", rho);
    out.constants.emplace_back("sigma", sigma);
    bool okh = lhs == rho * d.pow(3) + sigma * d.pow(2);

    // M of the associated family is affine in t^n.
    InvariantValue mv = inv_M(assoc);
    RatMatrix rows2;
    std::vector<Rat> rhs2;
    for (const Rat& tv : {Rat(1), Rat(2)}) {
        rows2.push_back({rat_pow(tv, n), Rat(1)});
        rhs2.push_back(eval_t(mv.value.num, tv) / eval_t(mv.value.den, tv));
    }
    LinearSolution sol2 = solve_linear(rows2, rhs2);
    if (!mv.defined || !sol2.consistent || !sol2.unique) {
        out.details = "affine fit for M is not uniquely solvable";
        return out;
    }
    Rat rho2 = sol2.x[0], sigma2 = sol2.x[1];
    out.constants.emplace_back("rho2", rho2);
    out.constants.emplace_back("sigma2", sigma2);
    bool okm = mv.value == RatFn(rho2 * tn + Poly(sigma2), Poly(1));

    // Consistency: M = (rho d + sigma) / a^2 forces the affine coefficients.
    Rat lead = Rat(int_pow(Int(1 - n), static_cast<unsigned long>(n - 1)),
                   int_pow(Int(n), static_cast<unsigned long>(n)));
    bool okc = rho2 == rho * lead / (a_const * a_const) && sigma2 == (rho + sigma) / (a_const * a_const);

    out.ok = okj && oka && okh && okm && okc;
    out.samples = 4;
    out.details = out.ok ? "all identities hold symbolically" : "an identity failed";
    return out;
}

EvidenceReport check_ft_associated(const std::vector<int>& ns) {
    EvidenceReport rep;
    rep.name = "associated forms of the one-parameter family";
    bool ok = true;
    std::string details;
    for (int n : ns) {
        CalibrationResult c = fit_ft_constants(n);
        bool okn = c.ok;
        if (okn) {
            Rat rho2 = get_constant(c, "rho2");
            Rat sigma2 = get_constant(c, "sigma2");
            for (const Rat& t : {Rat(1), Rat(2), Rat(3), Rat(1, 2)}) {
                InvariantValue m = inv_M(families::family_t_associated_at(n, t));
                okn = okn && m.defined &&
                      m.value.rational_value() == rho2 * rat_pow(t, n) + sigma2;
                ++rep.samples;
            }
        }
        ok = ok && okn;
        details += "n=" + std::to_string(n) + (okn ? " ok; " : " failed; ");
    }
    rep.verified = ok;
    rep.details = details + "Hessian transvectant taken at its full order 2(2n-6)";
    return rep;
}

namespace {

bool in_symmetry_orbit(const Rat& a, const Rat& b) {
    // Parameter maps induced by permuting the three lines of the three-power
    // family: t, 1-t, 1/t, t/(t-1), 1/(1-t), (t-1)/t.
    return b == a || b == 1 - a || b == 1 / a || b == a / (a - 1) || b == 1 / (1 - a) ||
           b == (a - 1) / a;
}

}  // namespace

std::optional<ThreePowerPair> certify_three_power_pair(const Rat& t1) {
    if (t1 == 0 || t1 == 1) return std::nullopt;
    QuinticInvariants inv = quintic_invariants(families::three_power_quintic());
    if (!inv.L.defined) return std::nullopt;

    // The numerator of L is lead * t^10 (t-1)^10 (t^2-t+1) and the denominator
    // t^8 (t-1)^8 (t^2-t+1)^4, so with t^2 (t-1)^2 = t^3 (u-2) and
    // (t^2-t+1)^3 = t^3 (u-1)^3 the invariant collapses to
    // L = lead (u-2)/(u-1)^3 in u = t + 1/t.
    Poly tvar = Poly::variable("t");
    Poly tm1 = tvar - Poly(1);
    Poly cyc = tvar * tvar - tvar + Poly(1);
    auto cn = Poly::divide_exact(inv.L.value.num, tvar.pow(10) * tm1.pow(10) * cyc);
    auto cd = Poly::divide_exact(inv.L.value.den, tvar.pow(8) * tm1.pow(8) * cyc.pow(4));
    if (!cn || !cd || !cn->is_constant() || !cd->is_constant()) return std::nullopt;

    Rat b1 = eval_t(inv.L.value.den, t1);
    if (b1 == 0) return std::nullopt;
    Rat l1 = eval_t(inv.L.value.num, t1) / b1;
    if (l1 == 0) return std::nullopt;

    ThreePowerPair out;
    out.t1 = t1;
    out.l1 = l1;
    out.lead = cn->constant_value() / cd->constant_value();

    // Roots of the cubic are the u-values with L = -l1. Bracket one in
    // (-2, 2); a root there cannot be u of any real t, so t2 is nonreal and
    // in particular admissible and off the rational symmetry orbit.
    Poly uvar = Poly::variable("u");
    Poly um1 = uvar - Poly(1);
    Poly cubic = l1 * um1.pow(3) + out.lead * (uvar - Poly(2));
    auto ev = [&](const Rat& u) { return cubic.evaluate({{"u", u}}); };
    const int mesh = 64;
    Rat prev_u(-2);
    Rat prev_g = ev(prev_u);
    for (int k = 1; k <= 4 * mesh; ++k) {
        Rat u = Rat(-2) + Rat(k, mesh);
        Rat gu = ev(u);
        if (gu == 0) {
            if (u != 1) {
                out.lo = out.hi = u;
                return out;
            }
            prev_u = u;
            prev_g = gu;
            continue;
        }
        if (prev_g != 0 && (prev_g < 0) != (gu < 0)) {
            Rat lo = prev_u, hi = u, glo = prev_g;
            bool rational_root = false;
            for (int it = 0; it < 210; ++it) {
                Rat mid = (lo + hi) / 2;
                Rat gm = ev(mid);
                if (gm == 0) {
                    lo = hi = mid;
                    rational_root = true;
                    break;
                }
                if ((gm < 0) == (glo < 0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            // u0 = 1 would be a pole of the u-form of L, not a solution.
            bool away_from_one = rational_root ? lo != 1 : (lo > 1 || hi < 1);
            if (away_from_one && Rat(-2) < lo && hi < Rat(2)) {
                out.lo = lo;
                out.hi = hi;
                return out;
            }
        }
        prev_u = u;
        prev_g = gu;
    }
    return std::nullopt;
}

EvidenceReport counterexample_suite() {
    EvidenceReport rep;
    rep.name = "joint indispensability of J, K, L";
    bool ok = true;

    QuinticInvariants a = quintic_invariants(families::family_t(5));
    ok = ok && a.I12.is_zero() && a.J.defined && !a.J.value.is_constant() && a.K.defined &&
         a.K.value.is_zero() && a.L.defined && a.L.value.is_zero();

    QuinticInvariants b = quintic_invariants(families::reciprocal_quintic());
    ok = ok && b.J.defined && b.J.value.is_zero() && b.L.defined && b.L.value.is_zero() &&
         b.K.defined && !b.K.value.is_constant();

    QuinticInvariants c = quintic_invariants(families::three_power_quintic());
    ok = ok && c.J.defined && c.J.value.is_constant() && c.K.defined &&
         !c.K.value.is_constant();

    // Exact search for two parameters off the symmetry orbit with equal K
    // and opposite nonzero L.
    struct Entry {
        Rat t, l;
    };
    std::map<Rat, std::vector<Entry>> by_k;
    std::optional<std::pair<Rat, Rat>> found;
    Rat found_k, found_l;
    for (int p = -30; p <= 30 && !found; ++p) {
        for (int q = 1; q <= 30 && !found; ++q) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Rat t(p, q);
            if (t == 0 || t == 1) continue;
            QuinticInvariants qi = quintic_invariants(families::three_power_quintic_at(t));
            if (!qi.K.defined) continue;
            ++rep.samples;
            Rat kv = qi.K.value.rational_value();
            Rat lv = qi.L.value.rational_value();
            if (lv == 0) continue;
            for (const Entry& e : by_k[kv]) {
                if (e.l != -lv) continue;
                if (in_symmetry_orbit(e.t, t)) continue;
                found = std::make_pair(e.t, t);
                found_k = kv;
                found_l = lv;
                break;
            }
            by_k[kv].push_back({t, lv});
        }
    }
    if (found) {
        EquivalenceVerdict v =
            equivalent_quintics(families::three_power_quintic_at(found->first),
                                families::three_power_quintic_at(found->second));
        ok = ok && !v.equivalent && v.witness[0].matched && v.witness[1].matched &&
             !v.witness[2].matched;
        rep.details = "pair t1 = " + rat_str(found->first) + ", t2 = " + rat_str(found->second) +
                      " with equal J and K = " + rat_str(found_k) +
                      " but L = -L' = " + rat_str(found_l);
    } else {
        // The box holds no rational collision, and none exists over the
        // reals: L is nonnegative on every real parameter. The pair the
        // vanishing pattern demands is complex, and the certificate pins one
        // down exactly.
        std::optional<ThreePowerPair> cert = certify_three_power_pair(Rat(2));
        ok = ok && cert.has_value();
        if (cert) {
            rep.details = "rational box |p|,|q| <= 30 exhausted (L >= 0 on the real line); "
                          "certified complex pair: t1 = " +
                          rat_str(cert->t1) + ", t2 = (u0 + i*sqrt(4 - u0^2))/2 with u0 in [" +
                          decimal_str(cert->lo, 35) + ", " + decimal_str(cert->hi, 35) +
                          "]; L(t2) = -L(t1) = " + rat_str(-cert->l1) +
                          " exactly and K matches via L^2 = J*K";
        } else {
            rep.details = "no pair found: rational box exhausted and certification failed";
        }
    }
    rep.verified = ok;
    return rep;
}

EvidenceReport check_expressF() {
    EvidenceReport rep;
    rep.name = "closed form of F";
    BinaryForm f = families::family_st();
    BinaryForm sq = f * f;
    Poly big_n = scalar_tv(sq, sq, 10);
    Poly i12 = quintic_invariants(f).I12;
    Poly delta = families::closed_form_sym(ClosedForm::delta_st).first;
    Poly bf = families::closed_form_sym(ClosedForm::bigF).first;
    Int base = Int(19200) * factorial(10);
    Poly rhs = Rat(Int(-27) * Int(10000000000)) * i12 +
               Rat(Int(115625), Int(4608) * factorial(10)) * (delta * big_n) +
               Rat(Int(5), 2 * base * base * base) * big_n.pow(3);
    rep.verified = bf == rhs;
    rep.samples = 1;
    rep.details = rep.verified
                      ? "F = -27*10^10 I12 + (115625/(4608*10!)) disc * T + (5/(2*(19200*10!)^3)) T^3 "
                        "with T the degree-10 self-transvectant of the square"
                      : "symbolic identity failed";
    return rep;
}

std::vector<EvidenceReport> run_all() {
    std::vector<EvidenceReport> out;
    out.push_back(check_quartic_duality({Rat(1), Rat(3), Rat(-5), Rat(1, 2), Rat(7, 3), Rat(-9, 4)}));
    CalibrationResult cal = calibrate_sextics();
    out.push_back({"sextic calibration", cal.ok, cal.samples, cal.details});
    out.push_back(check_connections());
    out.push_back(check_ft_associated({5, 6, 7}));
    out.push_back(check_expressF());
    out.push_back(counterexample_suite());
    return out;
}

}  // namespace curvex::conjecture
